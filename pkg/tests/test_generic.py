import numpy as np
import pytest

from quivertrop import fixtures as fx
from quivertrop.errors import NotAcyclic
from quivertrop.fields import GF
from quivertrop.generic import (canonical_decomposition, dimension_of_weight, euler_value, fg_pairing_acyclic,
                                generic_ext, generic_hom, generic_newton, injective_weight, is_schur_root,
                                is_schur_root_by_subreps, maximal_paths_bijection, projective_weight,
                                schur_sequences, strongly_perp)
from quivertrop.quiver import Quiver, euler_form
from quivertrop.representation import hom_dim, random_representation
from quivertrop.subreps import newton_polytope, sampled_general_lattice


def sampled_ext(quiver, name, alpha, beta, samples=3, seed=0):
    """``min dim Hom(M, N) - <alpha, beta>`` over random pairs over GF(101)."""
    alg = fx.algebra(name)
    best = None
    for s in range(samples):
        rng = np.random.default_rng([seed, s])
        M = random_representation(alg, alpha, rng, GF(101))
        N = random_representation(alg, beta, rng, GF(101))
        h = hom_dim(M, N)
        best = h if best is None else min(best, h)
    return best - euler_form(quiver, alpha, beta)


def test_kronecker_simples():
    assert generic_ext(fx.KRONECKER3, (1, 0), (0, 1)) == 3
    assert generic_hom(fx.KRONECKER3, (0, 1), (1, 0)) == 0


@pytest.mark.parametrize("name", ["A2", "A3", "kronecker3", "twoone"])
def test_schofield_matches_sampling_on_small_pairs(name):
    q = fx.QUIVERS[name]
    rng = np.random.default_rng(11)
    for _ in range(15):
        alpha = tuple(int(x) for x in rng.integers(0, 3, q.n))
        beta = tuple(int(x) for x in rng.integers(0, 3, q.n))
        assert generic_ext(q, alpha, beta) == sampled_ext(q, name, alpha, beta)


def test_canonical_decompositions():
    assert canonical_decomposition(fx.A2, (2, 2)) == {(1, 1): 2}
    assert canonical_decomposition(fx.A2, (1, 2)) == {(1, 1): 1, (0, 1): 1}
    assert canonical_decomposition(fx.KRONECKER3, (3, 3)) == {(3, 3): 1}
    k2 = Quiver(2, [("a", 1, 2), ("b", 1, 2)])
    assert canonical_decomposition(k2, (2, 2)) == {(1, 1): 2}


@pytest.mark.parametrize("name", ["A3", "kronecker3", "twoone"])
def test_schur_root_two_routes(name):
    q = fx.QUIVERS[name]
    for alpha in np.ndindex(*([4] * q.n)):
        if any(alpha):
            assert is_schur_root(q, alpha) == is_schur_root_by_subreps(q, alpha)


def test_twoone_examples():
    assert is_schur_root(fx.TWOONE, (3, 2, 2))
    assert euler_value(fx.TWOONE, (3, 5, 2)) == -2
    assert injective_weight(fx.TWOONE, (3, 5, 2)) == (-7, 3, 2)
    assert set(generic_newton(fx.TWOONE, (3, 5, 2)).vertices) == fx.GENACYCLIC_VERTICES


def test_weights_and_dimensions_are_inverse():
    for beta in [(1, 0, 0), (3, 5, 2), (0, 1, 1)]:
        assert dimension_of_weight(fx.TWOONE, projective_weight(fx.TWOONE, beta)) == beta


@pytest.mark.parametrize("name,alpha", [("A3", (1, 2, 1)), ("kronecker3", (1, 2)), ("twoone", (1, 2, 1))])
def test_generic_newton_matches_oracle_on_general_representation(name, alpha):
    alg = fx.algebra(name)
    _, lattice = sampled_general_lattice(alg, alpha, samples=5, rng_seed=3)
    assert newton_polytope(lattice) == generic_newton(fx.QUIVERS[name], alpha)


def test_schur_sequence_bijection_on_twoone():
    report = maximal_paths_bijection(fx.TWOONE, fx.GENACYCLIC_ALPHA)
    assert report.bijective and len(report.paths) == 6
    got = sorted(tuple(s.partial_sums()) for s in schur_sequences(fx.TWOONE, fx.GENACYCLIC_ALPHA))
    assert got == sorted(tuple(p) for p, _ in fx.SCHUR_PATH_TABLE)


def test_strongly_perp_pairs():
    assert strongly_perp(fx.TWOONE, (0, 1, 0), (3, 2, 2))
    assert not strongly_perp(fx.TWOONE, (3, 2, 2), (0, 1, 0))


def test_pairing_routes_agree_on_A3():
    for a in [(1, 0, 0), (0, 1, 1), (1, -1, 0)]:
        r = fg_pairing_acyclic(fx.A3, a, (1, 1, -1), rng_seed=2)
        assert r.agree


def test_generic_engine_rejects_cycles():
    with pytest.raises(NotAcyclic):
        generic_ext(fx.QP4, (1, 0, 0, 0), (0, 1, 0, 0))


def test_printed_schur_roots_match_each_path():
    report = maximal_paths_bijection(fx.TWOONE, fx.GENACYCLIC_ALPHA)
    by_path = {tuple(report.paths[i]): report.sequences[j] for i, j in report.matched.items()}
    for path, roots in fx.SCHUR_PATH_TABLE:
        assert list(by_path[tuple(path)].roots) == roots
