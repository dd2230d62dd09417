import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import linprog

from quivertrop.errors import DimensionMismatch, EmptyInput, IncomparableEdge, VertexNotInP
from quivertrop.polytope import (Cone, cone_contains, cones_intersect_in_face, convex_hull, dot, edge_quiver,
                                 extreme_rays, minkowski_sum, normal_cone, normal_fan)


def in_hull_lp(points, x):
    """Feasibility of ``sum l_i p_i = x, sum l_i = 1, l >= 0`` by linear programming."""
    P = np.array(points, dtype=float).T
    A = np.vstack([P, np.ones((1, P.shape[1]))])
    b = np.concatenate([np.array(x, dtype=float), [1.0]])
    res = linprog(np.zeros(P.shape[1]), A_eq=A, b_eq=b, bounds=[(0, None)] * P.shape[1], method="highs")
    return res.status == 0


def test_unit_square():
    P = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1), (0, 0)])
    assert sorted(P.vertices) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(P.facets) == 4 and len(P.edges) == 4
    assert normal_cone(P, (1, 1)).contains((1, 1)) and not normal_cone(P, (1, 1)).contains((-1, 0))


def test_fifty_random_points_in_four_dimensions_against_lp():
    rng = np.random.default_rng(7)
    pts = [tuple(int(x) for x in rng.integers(-4, 5, 4)) for _ in range(50)]
    P = convex_hull(pts)
    assert P.dim == 4
    assert all(P.contains(p) for p in pts)
    for v in P.vertices:
        others = [p for p in set(pts) if p != v]
        assert not in_hull_lp(others, v)
    for p in set(pts) - set(P.vertices):
        assert in_hull_lp(P.vertices, p)
    for _ in range(200):
        x = tuple(int(y) for y in rng.integers(-5, 6, 4))
        assert P.contains(x) == in_hull_lp(P.vertices, x)


def test_lower_dimensional_polytope_keeps_equations():
    P = convex_hull([(0, 0, 1), (1, 0, 1), (0, 1, 1)])
    assert P.dim == 2
    assert P.equations == (((0, 0, 1), 1),)
    assert not P.contains((0, 0, 0))
    C = normal_cone(P, (1, 0, 1))
    assert C.contains((0, 0, 5)) and C.contains((0, 0, -5)) and C.contains((1, 0, 0))


def test_errors():
    with pytest.raises(EmptyInput):
        convex_hull([])
    with pytest.raises(DimensionMismatch):
        convex_hull([(0, 0), (1, 0, 0)])
    with pytest.raises(VertexNotInP):
        normal_cone(convex_hull([(0, 0), (2, 0)]), (1, 0))
    with pytest.raises(IncomparableEdge):
        edge_quiver(convex_hull([(1, 0), (0, 1)]))


def test_extreme_rays_of_positive_orthant():
    assert sorted(extreme_rays([(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_cone_generator_and_inequality_routes_agree():
    gens = [(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)]
    a = Cone.from_generators(gens, 3)
    b = Cone.from_inequalities(a.inequalities, 3)
    assert a.same_as(b)
    rng = np.random.default_rng(1)
    for _ in range(100):
        x = tuple(int(y) for y in rng.integers(-3, 4, 3))
        assert cone_contains(a, x) == cone_contains(b, x)


points3 = st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=1, max_size=12)


@given(pts=points3, qts=points3)
def test_minkowski_sum_matches_hull_of_pairwise_sums(pts, qts):
    P, Q = convex_hull(pts), convex_hull(qts)
    direct = convex_hull([tuple(a + b for a, b in zip(p, q)) for p in pts for q in qts])
    assert minkowski_sum(P, Q) == direct


@given(pts=points3, delta=st.lists(st.tuples(*[st.integers(-5, 5)] * 3), min_size=20, max_size=20))
def test_normal_fan_is_complete_and_matches_maximizers(pts, delta):
    P = convex_hull(pts)
    fan = normal_fan(P)
    for d in delta:
        assert sorted(fan.cone_of(d)) == sorted(P.maximizing_vertices(d))


@given(pts=points3)
def test_adjacent_normal_cones_meet_in_a_face(pts):
    P = convex_hull(pts)
    fan = normal_fan(P)
    for v, w in itertools.combinations(P.vertices, 2):
        assert cones_intersect_in_face(fan.cones[v], fan.cones[w])


def test_edges_of_cube():
    cube = convex_hull(list(itertools.product((0, 1), repeat=3)))
    assert len(cube.edges) == 12
    Q = edge_quiver(cube)
    assert len(Q.maximal_paths()) == 6
    assert all(sum(Q.factor(a)) == 1 for a in Q.arrows)
