"""Tropical F-polynomial of a Kronecker representation versus generic hom.

f_M(d) vanishes but hom(d, M) = 1 for a general presentation of weight d.
Doubling the weight closes the gap.
"""

from quivertrop import fixtures as fx
from quivertrop.presentation import generic_hom_e
from quivertrop.subreps import saturation_witness, submodule_dimvectors, tropical_f

M = fx.kronecker3_representation()
alg = fx.algebra("kronecker3")
delta = fx.KRONECKER3_WEIGHT
lattice = submodule_dimvectors(M, p=5)
print("subrepresentation dimension vectors:", sorted(lattice.dim_vectors))


def hom(w):
    return generic_hom_e(alg, w, M, samples=5, coeff_bound=100, rng_seed=0).hom


for n in (1, 2, 3):
    w = tuple(n * x for x in delta)
    print(f"n = {n}: f = {tropical_f(lattice, w)}, hom = {hom(w)}")
print("first n with equality:", saturation_witness(M, delta, hom, lattice=lattice))
