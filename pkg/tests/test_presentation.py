import numpy as np
import pytest
from hypothesis import given, strategies as st

from quivertrop import fixtures as fx
from quivertrop.fields import GF, QQ
from quivertrop.generic import dimension_of_weight
from quivertrop.presentation import (E_invariant, E_invariant_via_e, apply_presentation, cokernel, delta_vector,
                                     generic_hom_e, is_rigid_weight, kernel, minimal_presentation,
                                     sample_injective_presentation, sample_presentation, weight_pairing)
from quivertrop.representation import random_representation

weights3 = st.tuples(*[st.integers(-2, 2)] * 3)
dims3 = st.tuples(*[st.integers(0, 2)] * 3)


@given(delta=weights3, dims=dims3, seed=st.integers(0, 10**6))
def test_hom_minus_e_is_weight_pairing(delta, dims, seed):
    alg = fx.algebra("twoone")
    rng = np.random.default_rng(seed)
    M = random_representation(alg, dims, rng, GF(7))
    d = sample_presentation(alg, delta, rng, 100, GF(7))
    r = apply_presentation(d, M)
    assert r.e >= 0 and r.hom >= 0
    assert r.hom - r.e == weight_pairing(delta, dims)


def test_kronecker_fixture_hom_and_e():
    alg = fx.algebra("kronecker3")
    M = fx.kronecker3_representation()
    r1 = generic_hom_e(alg, (1, -1), M, samples=5, coeff_bound=100, rng_seed=0)
    r2 = generic_hom_e(alg, (2, -2), M, samples=5, coeff_bound=100, rng_seed=0)
    assert (r1.hom, r1.e) == (1, 1)
    assert (r2.hom, r2.e) == (0, 0)
    assert r1.provenance == "samples=5 coeffBound=100 rngSeed=0"


def test_general_kronecker_cokernel_has_dims_one_two():
    alg = fx.algebra("kronecker3")
    d = sample_presentation(alg, (1, -1), np.random.default_rng(3))
    assert cokernel(d).dims == (1, 2)


@given(d1=weights3, d2=weights3, seed=st.integers(0, 10**6))
def test_E_invariant_two_routes(d1, d2, seed):
    alg = fx.algebra("twoone")
    rng = np.random.default_rng(seed)
    p1 = sample_presentation(alg, d1, rng, 100, GF(11))
    p2 = sample_presentation(alg, d2, rng, 100, GF(11))
    assert E_invariant(p1, p2) == E_invariant_via_e(p1, p2)


def test_qp4_general_kernel_dims():
    alg = fx.algebra("qp4")
    d = sample_injective_presentation(alg, fx.QP4_DUAL_WEIGHT, np.random.default_rng(0), 100, GF(11))
    assert kernel(d).dims == fx.QP4_KERNEL_DIMS


@given(dims=dims3, seed=st.integers(0, 10**6))
def test_minimal_presentation_weight_over_hereditary(dims, seed):
    alg = fx.algebra("twoone")
    M = random_representation(alg, dims, np.random.default_rng(seed), GF(7))
    delta = delta_vector(M)
    assert dimension_of_weight(fx.TWOONE, delta) == tuple(dims)
    assert cokernel(minimal_presentation(M)).dims == tuple(dims)


def test_rigidity_of_simple_weights():
    alg = fx.algebra("A2")
    for delta in [(-1, 0), (0, -1), (1, 0), (0, 1), (1, -1)]:
        assert is_rigid_weight(alg, delta)
    kron = fx.algebra("kronecker3")
    assert not is_rigid_weight(kron, (1, -1))
