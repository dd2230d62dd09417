"""Quiver with potential on four vertices.

The general kernel of a sampled dual weight has dimension vector (1,1,1,2).
Each printed mutation sequence yields a cluster whose g-vectors sit in the
normal cone of one vertex of the kernel's Newton polytope.
"""

from quivertrop import fixtures as fx
from quivertrop.cluster import initial_seed, mutate_along
from quivertrop.polytope import normal_cone
from quivertrop.subreps import newton_polytope, sampled_kernel_lattice

K, lattice = sampled_kernel_lattice(fx.algebra("qp4"), fx.QP4_DUAL_WEIGHT, samples=5, rng_seed=0)
P = newton_polytope(lattice)
print("kernel dims:", K.dims)
print("vertices:", P.vertices)
B = fx.exchange_matrix(fx.QP4)
for vertex, _, sequence in fx.QP4_TABLE:
    G = mutate_along(initial_seed(B), sequence).G
    inside = all(normal_cone(P, vertex).contains(row) for row in G)
    print(f"mutate {sequence}: G = {G}, in cone of {vertex}: {inside}")
