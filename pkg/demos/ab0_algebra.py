"""The algebra 1 -> 2 -> 3 with 1 -> 3 and ab = 0.

Newton polytope of the regular module, the normal cones of its vertices,
and the rigid clusters found by sampling e on a box of weights.
"""

from quivertrop import fixtures as fx
from quivertrop.polytope import normal_cone
from quivertrop.presentation import rigid_clusters
from quivertrop.subreps import newton_polytope, submodule_dimvectors

A = fx.ab0_regular()
P = newton_polytope(submodule_dimvectors(A))
print("dim A =", A.dims, " vertices:", P.vertices)
for v in P.vertices:
    print(v, "cone rays:", normal_cone(P, v).rays())

found = rigid_clusters(fx.algebra("ab0"), box=2, samples=2, rng_seed=0)
print(len(found.indecomposables), "indecomposable rigid weights:", found.indecomposables)
graph = found.exchange_graph()
print(len(found.clusters), "clusters,", graph.number_of_edges(), "exchanges")
