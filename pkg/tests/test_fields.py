from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from quivertrop.fields import GF, QQ, field_from_tag, format_rational, integer_rank, parse_rational

small = st.integers(-4, 4)
matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c),
                                                           min_size=r, max_size=r)))


@pytest.mark.parametrize("field", [QQ, GF(5), GF(7)], ids=lambda f: f.tag)
@given(rows=matrices)
def test_rank_nullity_and_nullspace(field, rows):
    a = field.array(rows)
    N = field.nullspace(a)
    assert field.rank(a) + N.shape[1] == a.shape[1]
    assert field.is_zero_matrix(field.matmul(a, N))


@given(rows=matrices)
def test_solve_recovers_solution(rows):
    a = QQ.array(rows)
    x = QQ.array([[i + 1] for i in range(a.shape[1])])
    b = QQ.matmul(a, x)
    sol = QQ.solve(a, b)
    assert sol is not None
    assert (QQ.matmul(a, sol) == b).all()


def test_solve_reports_inconsistency():
    a = QQ.array([[1, 0], [1, 0]])
    assert QQ.solve(a, QQ.array([[1], [2]])) is None


@pytest.mark.parametrize("field", [QQ, GF(11)], ids=lambda f: f.tag)
def test_inverse(field, rng):
    while True:
        a = field.random_matrix(rng, 4, 4, 50)
        if field.rank(a) == 4:
            break
    assert (field.matmul(a, field.inverse(a)) == field.eye(4)).all()


def test_rational_round_trip():
    for text in ("3", "-2/6", "0", "7/1"):
        assert parse_rational(format_rational(parse_rational(text))) == parse_rational(text)
    assert format_rational(Fraction(-1, 3)) == "-1/3"


def test_field_tags():
    assert field_from_tag("Q") is QQ
    assert field_from_tag("GF(7)") == GF(7)
    with pytest.raises(ValueError):
        field_from_tag("R")


def test_prime_field_reduction():
    F = GF(5)
    assert F.convert(Fraction(1, 2)) == 3
    assert integer_rank([[1, 2], [2, 4]]) == 1
