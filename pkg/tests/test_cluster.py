import pytest
from hypothesis import given, strategies as st

from quivertrop import fixtures as fx
from quivertrop.cluster import (TropicalLedger, cluster_search, determinant, dual_c_vectors, exchange_quiver,
                                generic_newton_via_clusters, initial_seed, matmul, mutate_B, mutate_along,
                                mutate_seed, mutate_weight, transpose, tropical_transport, vertex_recovery)
from quivertrop.errors import IndexOutOfRange, LedgerIncomplete, NotSkewSymmetric, NotUnimodular
from quivertrop.presentation import generic_e, generic_hom_e
from quivertrop.subreps import newton_polytope, sampled_general_lattice

MATRICES = {name: fx.exchange_matrix(fx.QUIVERS[name]) for name in ("A2", "A3", "twoone", "qp4")}
sequences = st.lists(st.integers(1, 3), min_size=0, max_size=6)


@pytest.mark.parametrize("name", sorted(MATRICES))
def test_every_seed_to_depth_five(name):
    B = MATRICES[name]
    n = len(B)
    frontier = [initial_seed(B)]
    for _ in range(5):
        nxt = []
        for s in frontier:
            for k in range(1, n + 1):
                if s.history and s.history[-1] == k:
                    continue
                t = mutate_seed(s, k)
                back = mutate_seed(t, k)
                assert (back.B, back.G, back.C) == (s.B, s.G, s.C)
                assert abs(determinant(t.G)) == 1
                assert matmul(t.G, transpose(t.C)) == tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
                assert dual_c_vectors(t.G) == t.C
                nxt.append(t)
        frontier = nxt


def test_twoone_printed_clusters():
    B = MATRICES["twoone"]
    found = cluster_search(B, max_depth=5)
    for _, rows, seq in fx.GENACYCLIC_TABLE:
        s = mutate_along(initial_seed(B), seq)
        assert sorted(s.G) == sorted(rows)
        assert tuple(sorted(rows)) in found


def test_finite_types_have_catalan_many_clusters():
    assert len(cluster_search(MATRICES["A2"], max_depth=10)) == 5
    assert len(cluster_search(MATRICES["A3"], max_depth=10)) == 14


def test_norm_bound_prunes():
    small = cluster_search(MATRICES["twoone"], max_depth=8, norm_bound=2)
    assert all(max(abs(x) for r in key for x in r) <= 2 for key in small)
    assert len(small) < len(cluster_search(MATRICES["twoone"], max_depth=8, norm_bound=20))


def test_input_errors():
    with pytest.raises(NotSkewSymmetric):
        initial_seed(((0, 1), (1, 0)))
    with pytest.raises(IndexOutOfRange):
        mutate_seed(initial_seed(MATRICES["A2"]), 3)
    with pytest.raises(NotUnimodular):
        vertex_recovery(((2, 0), (0, 1)), (1, 1))


def test_vertex_recovery():
    rows = [(-1, 0, 0), (0, 1, -1), (0, 0, -1)]
    assert vertex_recovery(rows, (0, 3, 0)) == (0, 3, 0)
    assert vertex_recovery(((3, -2, 0), (2, -1, 0), (0, 0, 1)), (0, 1, 2)) == (2, 3, 2)


@given(delta=st.tuples(*[st.integers(-5, 5)] * 3), k=st.integers(1, 3))
def test_weight_mutation_is_involutive(delta, k):
    B = MATRICES["twoone"]
    assert mutate_weight(mutate_weight(delta, B, k), mutate_B(B, k), k) == delta


@given(delta=st.tuples(*[st.integers(-4, 4)] * 3), dual=st.tuples(*[st.integers(-4, 4)] * 3),
       value=st.integers(0, 20), seq=sequences)
def test_transport_along_a_chain_and_back_is_identity(delta, dual, value, seq):
    start = TropicalLedger(MATRICES["twoone"], delta, dual, value)
    led = start
    for k in seq:
        led = tropical_transport(led, k)
    for k in reversed(seq):
        led = tropical_transport(led, k)
    assert led == start


@given(delta=st.tuples(*[st.integers(-4, 4)] * 3), seq=sequences)
def test_negative_ledger_stays_zero(delta, seq):
    led = TropicalLedger(MATRICES["twoone"], delta, (0, 0, 0), 0)
    for k in seq:
        led = tropical_transport(led, k)
        assert led.dual == (0, 0, 0) and led.value == 0


def test_incomplete_ledger():
    with pytest.raises(LedgerIncomplete):
        tropical_transport(TropicalLedger(MATRICES["A2"], (1, 0), None, 0), 1)


def test_cluster_route_matches_oracle_on_A3():
    alg = fx.algebra("A3")
    M, lattice = sampled_general_lattice(alg, (1, 2, 1), rng_seed=5)
    P = generic_newton_via_clusters(lambda d: generic_hom_e(alg, d, M, 3, 100, 0).hom, MATRICES["A3"])
    assert P == newton_polytope(lattice)


def test_exchange_quiver_of_A2_is_oriented():
    alg = fx.algebra("A2")
    clusters = cluster_search(MATRICES["A2"])
    g = exchange_quiver(clusters, lambda x, y: generic_e(alg, x, y))
    assert g.number_of_nodes() == 5 and g.number_of_edges() == 5
    negative = tuple(sorted(initial_seed(MATRICES["A2"]).G))
    assert g.in_degree(negative) == 0
