"""Tropical F-polynomials, Newton polytopes and cluster data of quiver representations."""

__version__ = "0.1.0"

from .errors import BudgetExceeded, CheckFailed, InputError, ParseError, QuiverTropError
from .fields import GF, QQ
from .quiver import Quiver, Relation, RelationSet, build_algebra, euler_form
from .representation import Representation, hom_dim, projective, injective, simple
from .presentation import generic_hom_e, sample_presentation, sample_injective_presentation, kernel, cokernel
from .subreps import submodule_dimvectors, tropical_f, tropical_f_dual, newton_polytope
from .polytope import convex_hull, normal_fan, edge_quiver, minkowski_sum
from .generic import generic_newton, generic_ext, canonical_decomposition, schur_sequences
from .cluster import cluster_search, initial_seed, mutate_seed, vertex_recovery, generic_newton_via_clusters
