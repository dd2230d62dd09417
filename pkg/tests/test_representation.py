import numpy as np
import pytest

from quivertrop import fixtures as fx
from quivertrop.errors import DimensionMismatch, InvalidRepresentation
from quivertrop.fields import GF, QQ
from quivertrop.representation import (Representation, direct_sum, hom_dim, injective, projective,
                                       random_representation, regular_representation, simple)


@pytest.mark.parametrize("name", ["A2", "A3", "twoone", "kronecker3"])
def test_hom_from_projective_is_evaluation(name, rng):
    alg = fx.algebra(name)
    n = alg.quiver.n
    M = random_representation(alg, tuple(int(x) for x in rng.integers(0, 3, n)), rng)
    for i in range(1, n + 1):
        assert hom_dim(projective(alg, i), M) == M.dims[i - 1]
        assert hom_dim(M, injective(alg, i)) == M.dims[i - 1]


@pytest.mark.parametrize("name", ["qp4", "ab0"])
def test_projectives_over_bound_algebras(name):
    alg = fx.algebra(name)
    A = regular_representation(alg)
    for i in alg.quiver.vertices:
        assert hom_dim(projective(alg, i), A) == A.dims[i - 1]
        assert hom_dim(simple(alg, i), injective(alg, i)) == 1


def test_ab0_regular_dimension():
    assert fx.ab0_regular().dims == (1, 2, 3)


def test_relations_are_enforced():
    alg = fx.algebra("ab0")
    with pytest.raises(InvalidRepresentation):
        Representation(alg, (1, 1, 1), {"a": [[1]], "b": [[1]], "c": [[0]]})


def test_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        Representation(fx.algebra("A2"), (1, 2), {"a": [[1, 2]]})


def test_direct_sum_dimensions_and_hom_additivity(rng):
    alg = fx.algebra("kronecker3")
    M = random_representation(alg, (1, 2), rng)
    N = random_representation(alg, (2, 1), rng)
    S = direct_sum([M, N])
    assert S.dims == (3, 3)
    P = projective(alg, 1)
    assert hom_dim(P, S) == hom_dim(P, M) + hom_dim(P, N)
    assert hom_dim(S, S) == hom_dim(M, M) + hom_dim(M, N) + hom_dim(N, M) + hom_dim(N, N)


def test_change_of_field():
    M = fx.kronecker3_representation()
    Mp = M.over(GF(5))
    assert Mp.field == GF(5)
    assert Mp.dims == M.dims
    assert hom_dim(Mp, Mp) == hom_dim(M, M)
