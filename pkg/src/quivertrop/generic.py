"""Generic representation theory of acyclic quivers without relations.

``ext(alpha, beta)`` is computed by Schofield's recursion

    ext(alpha, beta) = max { -<alpha, beta'> : beta ->> beta' generically }
                     = max { -<alpha', beta> : alpha' <-< alpha generically }

where ``beta'`` is a generic quotient (``beta - beta'`` a generic subdimension
vector) and generic subdimension vectors are in turn decided by
``ext(gamma, alpha - gamma) = 0``.  Both maxima are evaluated and must agree.
Everything else here (Schur roots, canonical decomposition, generic Newton
polytopes, Schur sequences) is built on that table.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import BudgetExceeded, CheckFailed, NotAcyclic, NotSkewSymmetric, SchofieldMismatch
from .polytope import LatticePolytope, convex_hull, dot, edge_quiver
from .quiver import Quiver, build_algebra, euler_form

Vector = Tuple[int, ...]


def _box(alpha: Sequence[int]):
    return itertools.product(*[range(a + 1) for a in alpha])


def _sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


class GenericExtTable:
    """Memoized generic ``ext``/``hom`` for one acyclic quiver."""

    def __init__(self, quiver: Quiver, check_duality: bool = True):
        if not quiver.is_acyclic():
            raise NotAcyclic("generic ext needs an acyclic quiver")
        self.quiver = quiver
        self.check_duality = check_duality
        n = quiver.n
        self.euler_matrix = tuple(tuple((1 if u == v else 0) - quiver.arrow_count(u, v)
                                        for v in range(1, n + 1)) for u in range(1, n + 1))
        self.memo: Dict[Tuple[Vector, Vector], int] = {}

    def euler(self, x: Sequence[int], y: Sequence[int]) -> int:
        E = self.euler_matrix
        return sum(int(x[u]) * E[u][v] * int(y[v]) for u in range(len(E)) for v in range(len(E)) if E[u][v])

    def ext(self, alpha: Sequence[int], beta: Sequence[int]) -> int:
        alpha, beta = tuple(int(x) for x in alpha), tuple(int(x) for x in beta)
        key = (alpha, beta)
        if key in self.memo:
            return self.memo[key]
        if not any(alpha) or not any(beta):
            self.memo[key] = 0
            return 0
        quotient_side = max(-self.euler(alpha, q) for q in _box(beta)
                            if self.is_subrep(_sub(beta, q), beta))
        if self.check_duality:
            sub_side = max(-self.euler(s, beta) for s in _box(alpha) if self.is_subrep(s, alpha))
            if sub_side != quotient_side:
                raise SchofieldMismatch(f"ext{alpha, beta}: quotient side {quotient_side}, sub side {sub_side}")
        self.memo[key] = quotient_side
        return quotient_side

    def hom(self, alpha: Sequence[int], beta: Sequence[int]) -> int:
        return self.euler(alpha, beta) + self.ext(alpha, beta)

    def is_subrep(self, gamma: Sequence[int], alpha: Sequence[int]) -> bool:
        """A general ``alpha``-dimensional representation has a ``gamma``-dimensional subrepresentation."""
        gamma = tuple(int(x) for x in gamma)
        rest = _sub(alpha, gamma)
        if any(x < 0 for x in gamma) or any(x < 0 for x in rest):
            return False
        if not any(gamma) or not any(rest):
            return True
        return self.ext(gamma, rest) == 0


@lru_cache(maxsize=None)
def ext_table(quiver: Quiver) -> GenericExtTable:
    return GenericExtTable(quiver)


def _ensure_recursion_room(alpha: Sequence[int], beta: Sequence[int] = ()) -> None:
    need = 200 + 50 * (sum(alpha) + sum(beta))
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def generic_ext(quiver: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    _ensure_recursion_room(alpha, beta)
    return ext_table(quiver).ext(alpha, beta)


def generic_hom(quiver: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    _ensure_recursion_room(alpha, beta)
    return ext_table(quiver).hom(alpha, beta)


def generic_subrep(quiver: Quiver, gamma: Sequence[int], alpha: Sequence[int]) -> bool:
    _ensure_recursion_room(alpha)
    return ext_table(quiver).is_subrep(gamma, alpha)


def generic_subdimension_vectors(quiver: Quiver, alpha: Sequence[int]) -> List[Vector]:
    return [g for g in _box(alpha) if generic_subrep(quiver, g, alpha)]


def generic_newton(quiver: Quiver, alpha: Sequence[int]) -> LatticePolytope:
    return convex_hull(generic_subdimension_vectors(quiver, alpha))


def injective_weight(quiver: Quiver, alpha: Sequence[int]) -> Vector:
    """Weight of the minimal injective presentation of a general ``alpha``-dimensional representation.

    Its value on ``gamma`` is ``<gamma, alpha>``, so that the kernel of a
    general map ``I(w_+) -> I(w_-)`` has dimension vector ``alpha``.
    """
    t = ext_table(quiver)
    n = quiver.n
    return tuple(t.euler(tuple(1 if j == i else 0 for j in range(n)), alpha) for i in range(n))


def projective_weight(quiver: Quiver, beta: Sequence[int]) -> Vector:
    """``<beta, ->``: the weight of a minimal projective presentation of dimension ``beta``."""
    t = ext_table(quiver)
    n = quiver.n
    return tuple(t.euler(beta, tuple(1 if j == i else 0 for j in range(n))) for i in range(n))


def dimension_of_weight(quiver: Quiver, delta: Sequence[int]) -> Vector:
    """Inverse of ``projective_weight``: the ``beta`` with ``<beta, -> = delta``."""
    E = np.array(ext_table(quiver).euler_matrix, dtype=object)
    from .fields import QQ
    sol = QQ.solve(QQ.array(E.T.tolist()), QQ.array([[int(x)] for x in delta]))
    return tuple(int(x) for x in sol[:, 0])


def euler_value(quiver: Quiver, beta: Sequence[int]) -> int:
    return euler_form(quiver, beta, beta)


def is_real(quiver: Quiver, beta: Sequence[int]) -> bool:
    return euler_value(quiver, beta) == 1


def is_isotropic(quiver: Quiver, beta: Sequence[int]) -> bool:
    return euler_value(quiver, beta) == 0


def _splittings(quiver: Quiver, alpha: Vector):
    t = ext_table(quiver)
    for beta in _box(alpha):
        rest = _sub(alpha, beta)
        if not any(beta) or not any(rest) or beta > rest:
            continue
        if t.ext(beta, rest) == 0 and t.ext(rest, beta) == 0:
            yield beta, rest


@lru_cache(maxsize=None)
def _canonical(quiver: Quiver, alpha: Vector) -> Tuple[Vector, ...]:
    for beta, rest in _splittings(quiver, alpha):
        return tuple(sorted(_canonical(quiver, beta) + _canonical(quiver, rest)))
    return (alpha,)


def canonical_decomposition(quiver: Quiver, alpha: Sequence[int]) -> Dict[Vector, int]:
    """Schur roots with multiplicities summing to ``alpha``; splits whenever ``ext`` vanishes both ways."""
    alpha = tuple(int(x) for x in alpha)
    _ensure_recursion_room(alpha)
    if not any(alpha):
        return {}
    out: Dict[Vector, int] = {}
    for b in _canonical(quiver, alpha):
        out[b] = out.get(b, 0) + 1
    return dict(sorted(out.items()))


def is_schur_root(quiver: Quiver, alpha: Sequence[int]) -> bool:
    alpha = tuple(int(x) for x in alpha)
    if not any(alpha):
        return False
    return canonical_decomposition(quiver, alpha) == {alpha: 1}


def is_schur_root_by_subreps(quiver: Quiver, alpha: Sequence[int]) -> bool:
    """Schofield's criterion: ``<beta, alpha> - <alpha, beta> > 0`` for each proper generic subdimension vector."""
    alpha = tuple(int(x) for x in alpha)
    if not any(alpha):
        return False
    t = ext_table(quiver)
    for beta in _box(alpha):
        if not any(beta) or beta == alpha or not t.is_subrep(beta, alpha):
            continue
        if t.euler(beta, alpha) - t.euler(alpha, beta) <= 0:
            return False
    return True


def strongly_perp(quiver: Quiver, gamma: Sequence[int], beta: Sequence[int]) -> bool:
    """``gamma`` and ``beta`` are orthogonal generically and ``gamma`` is a vertex of ``N(gamma + beta)``."""
    gamma, beta = tuple(int(x) for x in gamma), tuple(int(x) for x in beta)
    return _strongly_perp(quiver, gamma, beta)


@lru_cache(maxsize=None)
def _strongly_perp(quiver: Quiver, gamma: Vector, beta: Vector) -> bool:
    t = ext_table(quiver)
    if t.hom(gamma, beta) or t.ext(gamma, beta):
        return False
    total = tuple(a + b for a, b in zip(gamma, beta))
    return gamma in generic_newton(quiver, total).vertices


@dataclass(frozen=True)
class SchurSequence:
    roots: Tuple[Vector, ...]
    coefficients: Tuple[int, ...]

    def partial_sums(self) -> List[Vector]:
        out = [tuple(0 for _ in self.roots[0])] if self.roots else []
        for b, c in zip(self.roots, self.coefficients):
            out.append(tuple(x + c * y for x, y in zip(out[-1], b)))
        return out


def _coefficient_allowed(quiver: Quiver, beta: Vector, c: int) -> bool:
    return c == 1 or euler_value(quiver, beta) >= 0


def schur_sequences(quiver: Quiver, alpha: Sequence[int], budget: int = 20000) -> List[SchurSequence]:
    """All Schur sequences ``(b_1, ..., b_r)`` with ``alpha = sum c_i b_i`` under the coefficient rule."""
    alpha = tuple(int(x) for x in alpha)
    _ensure_recursion_room(alpha)
    size = 1
    for a in alpha:
        size *= a + 1
    if size > budget:
        raise BudgetExceeded(f"{size} candidate roots exceed the budget {budget}")
    roots = [b for b in _box(alpha) if any(b) and is_schur_root(quiver, b)]
    out: List[SchurSequence] = []

    def extend(rest: Vector, chosen: List[Tuple[Vector, int]]):
        if not any(rest):
            out.append(SchurSequence(tuple(b for b, _ in chosen), tuple(c for _, c in chosen)))
            return
        for b in roots:
            if any(strongly_perp(quiver, prev, b) is False for prev, _ in chosen):
                continue
            c = 1
            while all(c * y <= x for x, y in zip(rest, b)):
                if _coefficient_allowed(quiver, b, c):
                    chosen.append((b, c))
                    extend(tuple(x - c * y for x, y in zip(rest, b)), chosen)
                    chosen.pop()
                c += 1

    extend(alpha, [])
    return sorted(out, key=lambda s: (len(s.roots), s.roots, s.coefficients))


def factor_as_schur_term(quiver: Quiver, factor: Sequence[int]) -> Optional[Tuple[Vector, int]]:
    """Write an edge factor as ``c * beta`` with ``beta`` Schur, if its canonical decomposition allows it."""
    dec = canonical_decomposition(quiver, factor)
    if len(dec) != 1:
        return None
    (beta, c), = dec.items()
    if not _coefficient_allowed(quiver, beta, c):
        return None
    return beta, c


@dataclass
class PathBijectionReport:
    paths: List[List[Vector]]
    sequences: List[SchurSequence]
    matched: Dict[int, int]
    unmatched_paths: List[int]
    unmatched_sequences: List[int]

    @property
    def bijective(self) -> bool:
        return not self.unmatched_paths and not self.unmatched_sequences and len(self.paths) == len(self.sequences)


def maximal_paths_bijection(quiver: Quiver, alpha: Sequence[int]) -> PathBijectionReport:
    """Match maximal paths of the edge quiver of ``N(alpha)`` with Schur sequences through their partial sums."""
    P = generic_newton(quiver, alpha)
    paths = edge_quiver(P).maximal_paths()
    seqs = schur_sequences(quiver, alpha)
    index = {tuple(s.partial_sums()): i for i, s in enumerate(seqs)}
    matched, missing = {}, []
    for i, p in enumerate(paths):
        j = index.get(tuple(p))
        if j is None:
            missing.append(i)
        else:
            matched[i] = j
    unused = [j for j in range(len(seqs)) if j not in matched.values()]
    return PathBijectionReport(paths, seqs, matched, missing, unused)


def path_to_schur_sequence(quiver: Quiver, path: Sequence[Sequence[int]]) -> Optional[SchurSequence]:
    roots, coeffs = [], []
    for a, b in zip(path, path[1:]):
        term = factor_as_schur_term(quiver, _sub(b, a))
        if term is None:
            return None
        roots.append(term[0])
        coeffs.append(term[1])
    return SchurSequence(tuple(roots), tuple(coeffs))


def assert_real_facet_normals(quiver: Quiver, P: LatticePolytope) -> None:
    """Facet normals off the origin never come from imaginary Schur roots."""
    for normal, offset in P.facets:
        if offset <= 0:
            continue
        beta = dimension_of_weight(quiver, normal)
        if all(x >= 0 for x in beta) and is_schur_root(quiver, beta) and euler_value(quiver, beta) <= 0:
            raise CheckFailed(f"facet normal {normal} comes from the imaginary Schur root {beta}")


def exchange_matrix(quiver: Quiver) -> Tuple[Tuple[int, ...], ...]:
    n = quiver.n
    return tuple(tuple(quiver.arrow_count(u, v) - quiver.arrow_count(v, u) for v in range(1, n + 1))
                 for u in range(1, n + 1))


@dataclass
class PairingResult:
    sampled: int
    via_polytope: int

    @property
    def agree(self) -> bool:
        return self.sampled == self.via_polytope

    @property
    def value(self) -> int:
        return self.sampled


def fg_pairing_acyclic(quiver: Quiver, a: Sequence[int], dual_weight: Sequence[int],
                       B: Optional[Sequence[Sequence[int]]] = None, samples: int = 3, rng_seed: int = 0,
                       coeff_bound: int = 100) -> PairingResult:
    """``hom(a B^T, dual_weight) - a . dual_weight`` by sampling, and via ``f`` of the generic kernel."""
    from .presentation import generic_hom_e, kernel, sample_injective_presentation
    Bq = exchange_matrix(quiver)
    if B is not None:
        B = tuple(tuple(int(x) for x in r) for r in B)
        n = len(B)
        if any(B[i][j] != -B[j][i] for i in range(n) for j in range(n)):
            raise NotSkewSymmetric("pairing needs a skew-symmetric matrix")
    else:
        B = Bq
    n = len(B)
    a = tuple(int(x) for x in a)
    delta = tuple(sum(a[i] * B[j][i] for i in range(n)) for j in range(n))
    correction = dot(a, dual_weight)
    alg = build_algebra(quiver)
    M = kernel(sample_injective_presentation(alg, dual_weight, np.random.default_rng([rng_seed, 7919]),
                                             coeff_bound))
    sampled = generic_hom_e(alg, delta, M, samples=samples, coeff_bound=coeff_bound, rng_seed=rng_seed).hom
    P = generic_newton(quiver, M.dims)
    return PairingResult(sampled - correction, P.support(delta) - correction)
