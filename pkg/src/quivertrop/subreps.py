"""Brute-force submodule enumeration over a small prime field.

Subrepresentations are arrow-invariant tuples of subspaces.  Vertices are
visited in order of increasing dimension; the subspace at each vertex is
confined between the span of images from already-chosen predecessors and
the preimage of already-chosen successors, and then enumerated in reduced
echelon form inside that interval.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import BudgetExceeded, EmptyInput, FieldMismatch, UniquenessViolated
from .fields import QQ, GF, PrimeField
from .polytope import LatticePolytope, convex_hull
from .representation import Representation

DimVector = Tuple[int, ...]
DEFAULT_BUDGET = 10 ** 7


@dataclass
class SubrepLattice:
    dims: DimVector
    dim_vectors: FrozenSet[DimVector]
    counts: Dict[DimVector, int]
    prime: int
    submodules: Optional[List[Dict[int, np.ndarray]]] = None

    def sorted_vectors(self) -> List[DimVector]:
        return sorted(self.dim_vectors)

    def quotient_vectors(self) -> List[DimVector]:
        return sorted(tuple(a - b for a, b in zip(self.dims, g)) for g in self.dim_vectors)

    def export(self) -> str:
        return "\n".join(" ".join(map(str, g)) for g in self.sorted_vectors())


def count_subspaces(n: int, p: int) -> int:
    """Number of subspaces of ``F_p^n`` (sum of Gaussian binomials)."""
    total = 0
    for k in range(n + 1):
        num, den = 1, 1
        for i in range(k):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total


def echelon_subspaces(c: int, p: int) -> Iterator[np.ndarray]:
    """All subspaces of ``F_p^c`` as reduced echelon row matrices, by pivot pattern."""
    for k in range(c + 1):
        for pivots in itertools.combinations(range(c), k):
            free = [(r, col) for r, pc in enumerate(pivots) for col in range(pc + 1, c) if col not in pivots]
            for values in itertools.product(range(p), repeat=len(free)):
                m = np.zeros((k, c), dtype=np.int64)
                for r, pc in enumerate(pivots):
                    m[r, pc] = 1
                for (r, col), x in zip(free, values):
                    m[r, col] = x
                yield m


class _Search:
    def __init__(self, p: int, dims: Sequence[int], arrows: Sequence[Tuple[str, int, int]],
                 matrices: Dict[str, np.ndarray], keep: bool):
        self.F = GF(p)
        self.p = p
        self.dims = tuple(dims)
        self.arrows = list(arrows)
        self.mats = {k: np.asarray(v, dtype=np.int64) % p for k, v in matrices.items()}
        self.keep = keep
        n = len(dims)
        self.order = sorted(range(1, n + 1), key=lambda v: (dims[v - 1], v))
        self.counts: Dict[DimVector, int] = {}
        self.found: List[Dict[int, np.ndarray]] = []

    def _rows(self, m: np.ndarray) -> np.ndarray:
        return self.F.row_basis(m) if m.shape[0] else m

    def interval(self, v: int, chosen: Dict[int, np.ndarray]) -> Optional[Tuple[np.ndarray, np.ndarray]]:
        F, n = self.F, self.dims[v - 1]
        imgs = [np.zeros((0, n), dtype=np.int64)]
        cons = [np.zeros((0, n), dtype=np.int64)]
        for lab, s, t in self.arrows:
            if t == v and s in chosen and s != v and chosen[s].shape[0]:
                imgs.append(F.matmul(chosen[s], self.mats[lab].T))
            if s == v and t in chosen and t != v:
                ann = _annihilator(F, chosen[t], self.dims[t - 1])
                if ann.shape[0]:
                    cons.append(F.matmul(ann, self.mats[lab]))
        S = self._rows(np.concatenate(imgs, axis=0))
        C = np.concatenate(cons, axis=0)
        T = F.nullspace(C).T if C.shape[0] else np.eye(n, dtype=np.int64)
        T = self._rows(T)
        if S.shape[0] and F.rank(np.concatenate([T, S], axis=0)) > T.shape[0]:
            return None
        return S, T

    def choices(self, v: int, chosen: Dict[int, np.ndarray]) -> Iterator[np.ndarray]:
        iv = self.interval(v, chosen)
        if iv is None:
            return
        S, T = iv
        F = self.F
        comp = _relative_complement(F, S, T)
        loops = [lab for lab, s, t in self.arrows if s == v and t == v]
        for R in echelon_subspaces(comp.shape[0], self.p):
            U = np.concatenate([S, F.matmul(R, comp)], axis=0) if R.shape[0] else S
            U = self._rows(U) if U.shape[0] else U
            if loops and U.shape[0]:
                ok = all(F.rank(np.concatenate([U, F.matmul(U, self.mats[lab].T)], axis=0)) == U.shape[0]
                         for lab in loops)
                if not ok:
                    continue
            yield U

    def run(self, chosen: Optional[Dict[int, np.ndarray]] = None, depth: int = 0) -> None:
        chosen = dict(chosen or {})
        if depth == len(self.order):
            gamma = tuple(chosen[v].shape[0] for v in range(1, len(self.dims) + 1))
            self.counts[gamma] = self.counts.get(gamma, 0) + 1
            if self.keep:
                self.found.append(dict(chosen))
            return
        v = self.order[depth]
        for U in self.choices(v, chosen):
            chosen[v] = U
            self.run(chosen, depth + 1)
        chosen.pop(v, None)


def _annihilator(F, rows: np.ndarray, n: int) -> np.ndarray:
    if rows.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    return F.nullspace(rows).T


def _relative_complement(F, S: np.ndarray, T: np.ndarray) -> np.ndarray:
    """Rows of ``T`` extending a basis of ``S`` to a basis of ``T``."""
    base = S
    out = []
    r = S.shape[0]
    for row in T:
        trial = np.concatenate([base, row.reshape(1, -1)], axis=0)
        if F.rank(trial) > r:
            base = trial
            r += 1
            out.append(row)
    n = T.shape[1]
    return np.array(out, dtype=np.int64).reshape(len(out), n)


def _as_prime(M: Representation, p: Optional[int]) -> Representation:
    if isinstance(M.field, PrimeField):
        if p is not None and M.field.p != p:
            raise FieldMismatch(f"representation is over {M.field}, requested GF({p})")
        return M
    return M.over(GF(p if p is not None else 5))


def _worker(args):
    p, dims, arrows, mats, keep, first = args
    search = _Search(p, dims, arrows, mats, keep)
    v = search.order[0]
    search.run({v: first}, 1)
    return search.counts, search.found


def submodule_dimvectors(M: Representation, p: Optional[int] = None, budget: int = DEFAULT_BUDGET,
                         keep_submodules: bool = False, jobs: int = 1) -> SubrepLattice:
    """Exact set of dimension vectors of subrepresentations of ``M`` over ``GF(p)``."""
    Mp = _as_prime(M, p)
    prime = Mp.field.p
    size = 1
    for d in Mp.dims:
        size *= count_subspaces(d, prime)
    if size > budget:
        raise BudgetExceeded(f"{size} subspace tuples exceed the budget {budget}")
    arrows = [(a.label, a.source, a.target) for a in Mp.quiver.arrows]
    mats = dict(Mp.matrices)
    counts: Dict[DimVector, int] = {}
    found: List[Dict[int, np.ndarray]] = []
    if Mp.quiver.n == 0:
        counts[()] = 1
    elif jobs > 1:
        probe = _Search(prime, Mp.dims, arrows, mats, keep_submodules)
        v = probe.order[0]
        firsts = list(probe.choices(v, {}))
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = ex.map(_worker, [(prime, Mp.dims, arrows, mats, keep_submodules, U) for U in firsts])
            for c, f in parts:
                for k, x in c.items():
                    counts[k] = counts.get(k, 0) + x
                found.extend(f)
    else:
        search = _Search(prime, Mp.dims, arrows, mats, keep_submodules)
        search.run()
        counts, found = search.counts, search.found
    counts = dict(sorted(counts.items()))
    return SubrepLattice(Mp.dims, frozenset(counts), counts, prime, found if keep_submodules else None)


def _lattice(M, p=None, lattice: Optional[SubrepLattice] = None, **kw) -> SubrepLattice:
    return lattice if lattice is not None else submodule_dimvectors(M, p, **kw)


def tropical_f(lattice: SubrepLattice, delta: Sequence[int]) -> int:
    """``f_M(delta) = max over subrepresentations L of delta . dim L``."""
    return max(sum(int(a) * b for a, b in zip(delta, g)) for g in lattice.dim_vectors)


def tropical_f_dual(lattice: SubrepLattice, delta: Sequence[int]) -> int:
    """Maximum of ``delta`` over quotient dimension vectors."""
    return max(sum(int(a) * (m - b) for a, m, b in zip(delta, lattice.dims, g)) for g in lattice.dim_vectors)


def newton_polytope(lattice: SubrepLattice) -> LatticePolytope:
    return convex_hull(lattice.dim_vectors)


def dual_newton_polytope(lattice: SubrepLattice) -> LatticePolytope:
    return convex_hull(lattice.quotient_vectors())


def maximizers(lattice: SubrepLattice, delta: Sequence[int]) -> List[DimVector]:
    best = tropical_f(lattice, delta)
    return sorted(g for g in lattice.dim_vectors if sum(int(a) * b for a, b in zip(delta, g)) == best)


def minmax_subrep(lattice: SubrepLattice, delta: Sequence[int]) -> Tuple[DimVector, DimVector]:
    """Dimension vectors of the least and the largest subrepresentation maximizing ``delta``."""
    top = maximizers(lattice, delta)
    low = tuple(min(g[i] for g in top) for i in range(len(lattice.dims)))
    high = tuple(max(g[i] for g in top) for i in range(len(lattice.dims)))
    if low not in top or high not in top:
        raise UniquenessViolated(f"maximizers of {tuple(delta)} have no least or largest element")
    if lattice.counts.get(low, 0) != 1 or lattice.counts.get(high, 0) != 1:
        raise UniquenessViolated(f"extremal maximizers of {tuple(delta)} are not unique submodules")
    return low, high


def is_semistable(lattice: SubrepLattice, delta: Sequence[int]) -> bool:
    """King's criterion: ``delta(dim M) = 0`` and ``delta(dim L) <= 0`` for every subrepresentation."""
    if sum(int(a) * b for a, b in zip(delta, lattice.dims)) != 0:
        return False
    return tropical_f(lattice, delta) <= 0


def vertex_uniqueness(lattice: SubrepLattice, polytope: Optional[LatticePolytope] = None) -> Dict[DimVector, int]:
    """Number of submodules realising each vertex of the Newton polytope (expected: 1 each)."""
    P = polytope if polytope is not None else newton_polytope(lattice)
    return {v: lattice.counts[v] for v in P.vertices}


def saturation_witness(M: Representation, delta: Sequence[int], hom_fn, n_max: int = 6,
                       lattice: Optional[SubrepLattice] = None) -> Optional[int]:
    """First ``n <= n_max`` with ``f_M(n delta) = hom(n delta, M)``; ``None`` if none is found.

    ``hom_fn(weight)`` supplies the generic ``hom``; ``f_M`` comes from the oracle.
    """
    lat = _lattice(M, lattice=lattice)
    for n in range(1, n_max + 1):
        w = tuple(n * int(x) for x in delta)
        if tropical_f(lat, w) == hom_fn(w):
            return n
    return None


SAMPLING_PRIME = 11


def generic_lattice(candidates: Sequence[Representation], p: Optional[int] = None, budget: int = DEFAULT_BUDGET,
                    jobs: int = 1) -> Tuple[Representation, SubrepLattice]:
    """The candidate of least total dimension, then fewest subrepresentation dimension vectors.

    Having a subrepresentation of a given dimension vector is a closed
    condition, so the smallest lattice among independent samples is the
    generic one with high probability.
    """
    if not candidates:
        raise EmptyInput("no candidate representations")
    best = None
    for M in candidates:
        lat = submodule_dimvectors(M, p, budget=budget, jobs=jobs)
        key = (sum(M.dims), len(lat.dim_vectors))
        if best is None or key < best[0]:
            best = (key, M, lat)
    return best[1], best[2]


def sampled_kernel_lattice(algebra, dual_weight: Sequence[int], samples: int = 5, coeff_bound: int = 100,
                           rng_seed: int = 0, p: int = SAMPLING_PRIME, budget: int = DEFAULT_BUDGET,
                           jobs: int = 1) -> Tuple[Representation, SubrepLattice]:
    """Kernel of a general injective presentation of ``dual_weight``, sampled over ``GF(p)``."""
    from .presentation import kernel, sample_injective_presentation
    field = GF(p)
    reps = [kernel(sample_injective_presentation(algebra, dual_weight, np.random.default_rng([rng_seed, 2, s]),
                                                 coeff_bound, field)) for s in range(samples)]
    return generic_lattice(reps, p, budget, jobs)


def sampled_general_lattice(algebra, dims: Sequence[int], samples: int = 5, coeff_bound: int = 100,
                            rng_seed: int = 0, p: int = SAMPLING_PRIME, budget: int = DEFAULT_BUDGET,
                            jobs: int = 1) -> Tuple[Representation, SubrepLattice]:
    """A general representation of dimension ``dims`` (no relations), sampled over ``GF(p)``."""
    from .representation import random_representation
    field = GF(p)
    reps = [random_representation(algebra, dims, np.random.default_rng([rng_seed, 3, s]), field, coeff_bound)
            for s in range(samples)]
    return generic_lattice(reps, p, budget, jobs)
