"""Generic Newton polytope of alpha = (3,5,2) on the quiver 1 => 2 -> 3.

The polytope comes from Schofield's recursion alone.  Its vertices are then
recovered a second time from g-vector clusters and sampled hom values, and
its maximal edge paths are read off as Schur sequences.
"""

import numpy as np

from quivertrop import fixtures as fx
from quivertrop.cluster import cluster_search, vertex_recovery
from quivertrop.generic import generic_newton, maximal_paths_bijection
from quivertrop.presentation import generic_hom_e
from quivertrop.representation import random_representation

alpha = fx.GENACYCLIC_ALPHA
P = generic_newton(fx.TWOONE, alpha)
print("vertices:", P.vertices)

clusters = cluster_search(fx.exchange_matrix(fx.TWOONE), max_depth=5)
M = random_representation(fx.algebra("twoone"), alpha, np.random.default_rng(0))
recovered = set()
for record in clusters.values():
    G = record.seed.G
    h = [generic_hom_e(M.algebra, row, M, rng_seed=1).hom for row in G]
    recovered.add(vertex_recovery(G, h))
print(f"{len(clusters)} clusters within depth 5 recover {sorted(recovered)}")

report = maximal_paths_bijection(fx.TWOONE, alpha)
for i, j in sorted(report.matched.items()):
    seq = report.sequences[j]
    terms = " + ".join(f"{c}*{r}" if c > 1 else str(r) for r, c in zip(seq.roots, seq.coefficients))
    print(" -> ".join(map(str, report.paths[i])), "  |  ", terms)
