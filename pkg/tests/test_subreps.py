import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from quivertrop import fixtures as fx
from quivertrop.errors import BudgetExceeded
from quivertrop.fields import GF
from quivertrop.polytope import dot
from quivertrop.presentation import apply_presentation, sample_presentation
from quivertrop.representation import direct_sum, random_representation, zero_representation
from quivertrop.subreps import (count_subspaces, echelon_subspaces, is_semistable, minmax_subrep, newton_polytope,
                                submodule_dimvectors, tropical_f, tropical_f_dual, vertex_uniqueness)


def brute_force_counts(M, p):
    F = GF(p)
    q = M.quiver
    spaces = [list(echelon_subspaces(d, p)) for d in M.dims]
    counts = {}
    for choice in itertools.product(*spaces):
        ok = True
        for a in q.arrows:
            U, T = choice[a.source - 1], choice[a.target - 1]
            if U.shape[0] == 0:
                continue
            image = F.matmul(U, M.matrices[a.label].T % p)
            if F.rank(np.concatenate([T, image], axis=0)) != T.shape[0]:
                ok = False
                break
        if ok:
            g = tuple(U.shape[0] for U in choice)
            counts[g] = counts.get(g, 0) + 1
    return counts


@pytest.mark.parametrize("n,p", [(0, 2), (1, 3), (2, 2), (3, 3), (4, 2)])
def test_gaussian_count_matches_enumeration(n, p):
    assert count_subspaces(n, p) == sum(1 for _ in echelon_subspaces(n, p))


@pytest.mark.parametrize("name,dims", [("A2", (2, 2)), ("A3", (1, 2, 1)), ("kronecker3", (2, 2)),
                                       ("twoone", (1, 2, 1))])
def test_pruned_search_matches_brute_force(name, dims, rng):
    for p in (2, 3):
        M = random_representation(fx.algebra(name), dims, rng, GF(p))
        assert submodule_dimvectors(M).counts == brute_force_counts(M, p)


def test_pruned_search_on_bound_algebra_matches_brute_force():
    A = fx.ab0_regular(GF(3))
    assert submodule_dimvectors(A).counts == brute_force_counts(A, 3)


def test_parallel_search_is_identical(rng):
    M = random_representation(fx.algebra("twoone"), (2, 2, 1), rng, GF(3))
    assert submodule_dimvectors(M, jobs=2).counts == submodule_dimvectors(M, jobs=1).counts


def test_budget_is_enforced():
    M = random_representation(fx.algebra("twoone"), (3, 5, 2), np.random.default_rng(0), GF(5))
    with pytest.raises(BudgetExceeded):
        submodule_dimvectors(M)


def test_zero_representation_gives_point():
    lat = submodule_dimvectors(zero_representation(fx.algebra("A3"), GF(5)))
    assert newton_polytope(lat).vertices == ((0, 0, 0),)


def test_kronecker_fixture_values():
    lat = submodule_dimvectors(fx.kronecker3_representation(), p=7)
    assert tropical_f(lat, (1, -1)) == 0
    assert is_semistable(lat, (1, -1))
    assert minmax_subrep(lat, (1, -1)) == ((0, 0), (3, 3))


def test_vertices_are_realised_once_for_ab0():
    lat = submodule_dimvectors(fx.ab0_regular())
    assert set(vertex_uniqueness(lat).values()) == {1}


reps = st.tuples(st.sampled_from(["A2", "A3", "twoone"]), st.integers(0, 10**6))


def _rep(name, seed, p=5, top=2):
    alg = fx.algebra(name)
    rng = np.random.default_rng(seed)
    dims = tuple(int(x) for x in rng.integers(0, top + 1, alg.quiver.n))
    return random_representation(alg, dims, rng, GF(p), coeff_bound=4)


@given(case=reps, other=st.integers(0, 10**6), delta=st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_f_is_additive_on_direct_sums(case, other, delta):
    M = _rep(*case)
    N = _rep(case[0], other, top=1)
    delta = delta[: M.quiver.n]
    lm, ln = submodule_dimvectors(M), submodule_dimvectors(N)
    ls = submodule_dimvectors(direct_sum([M, N]))
    assert tropical_f(ls, delta) == tropical_f(lm, delta) + tropical_f(ln, delta)


@given(case=reps, delta=st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_f_and_dual_are_related_through_negated_weight(case, delta):
    M = _rep(*case)
    delta = delta[: M.quiver.n]
    lat = submodule_dimvectors(M)
    assert tropical_f(lat, delta) - tropical_f_dual(lat, [-x for x in delta]) == dot(delta, M.dims)
    assert tropical_f(lat, delta) >= 0 and tropical_f_dual(lat, delta) >= 0


def test_f_plus_dual_at_same_weight_is_not_the_pairing():
    # the simple representation of A2 at vertex 1 already separates the two identities
    from quivertrop.representation import simple
    lat = submodule_dimvectors(simple(fx.algebra("A2"), 1, GF(5)))
    assert tropical_f(lat, (1, 0)) + tropical_f_dual(lat, (1, 0)) == 2
    assert dot((1, 0), (1, 0)) == 1


@given(case=reps, delta=st.lists(st.integers(-2, 2), min_size=3, max_size=3), seed=st.integers(0, 10**6))
def test_f_bounded_by_hom_of_any_presentation(case, delta, seed):
    M = _rep(*case)
    delta = delta[: M.quiver.n]
    d = sample_presentation(M.algebra, delta, np.random.default_rng(seed), 100, M.field)
    assert tropical_f(submodule_dimvectors(M), delta) <= apply_presentation(d, M).hom


def test_simple_sum_over_A2_has_all_four_vectors():
    from quivertrop.representation import simple
    alg = fx.algebra("A2")
    lat = submodule_dimvectors(direct_sum([simple(alg, 1, GF(5)), simple(alg, 2, GF(5))]))
    assert lat.sorted_vectors() == [(0, 0), (0, 1), (1, 0), (1, 1)]
