import pytest

from quivertrop import fixtures as fx
from quivertrop.errors import CycleWithoutRelations, NonAdmissible, InputError
from quivertrop.quiver import Quiver, Relation, RelationSet, build_algebra, euler_form


def test_path_algebra_dimensions_of_A3():
    alg = fx.algebra("A3")
    assert alg.projective_dims(1) == (1, 1, 1)
    assert alg.projective_dims(3) == (0, 0, 1)
    assert alg.injective_dims(1) == (1, 0, 0)
    assert alg.total_dimension == 6


def test_relation_kills_composite_in_ab0():
    alg = fx.algebra("ab0")
    assert alg.dim(1, 3) == 1  # only the arrow c survives
    assert alg.projective_dims(1) == (1, 1, 1)
    assert alg.projective_dims(2) == (0, 1, 1)


def test_qp4_cyclic_relations_make_finite_algebra():
    alg = fx.algebra("qp4")
    assert alg.dim(1, 3) == 0
    assert alg.dim(1, 4) == 1


def test_cycle_without_relations_is_rejected():
    q = Quiver(2, [("a", 1, 2), ("b", 2, 1)])
    with pytest.raises(CycleWithoutRelations):
        build_algebra(q)


def test_relation_with_unknown_arrow():
    q = Quiver(1, [("a", 1, 1)])
    with pytest.raises(InputError):
        build_algebra(q, RelationSet((Relation.of("a*b"),)))


def test_euler_form_on_twoone():
    assert euler_form(fx.TWOONE, (3, 5, 2), (3, 5, 2)) == -2
    assert euler_form(fx.KRONECKER3, (1, 0), (0, 1)) == -3


def test_exchange_matrix_is_skew():
    for q in fx.QUIVERS.values():
        B = fx.exchange_matrix(q)
        assert all(B[i][j] == -B[j][i] for i in range(q.n) for j in range(q.n))
    assert fx.exchange_matrix(fx.TWOONE) == ((0, 2, 0), (-2, 0, 1), (0, -1, 0))


def test_loop_with_square_zero_is_two_dimensional():
    q = Quiver(1, [("a", 1, 1)])
    alg = build_algebra(q, RelationSet((Relation.of("a*a"),)))
    assert alg.dim(1, 1) == 2


def test_non_homogeneous_relation_rejected_as_non_admissible():
    q = Quiver(1, [("a", 1, 1)])
    with pytest.raises(NonAdmissible):
        build_algebra(q, RelationSet((Relation.of((1, "a*a"), (-1, "a*a*a")),), path_length_bound=6))
