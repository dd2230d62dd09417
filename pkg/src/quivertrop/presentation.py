"""Projective and injective presentations, and the invariants they induce.

A presentation of weight ``delta`` is a map ``P(delta_-) -> P(delta_+)``.
Its coefficient ``(r, c)`` lies in ``Hom(P_i, P_j) = e_j A e_i`` where
``j = plus[r]`` and ``i = minus[c]``.  Applying ``Hom(-, M)`` gives

    C(d, M): M(plus[0]) + ... -> M(minus[0]) + ...,

whose nullity is ``hom(d, M)`` and corank is ``e(d, M)``.  The Nakayama
functor sends the presentation to ``I(delta_-) -> I(delta_+)`` with the same
coefficients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, NonRigidWeight, NotExchangePair
from .fields import QQ, Field, integer_rank
from .quiver import AlgebraBasis
from .representation import (Morphism, Representation, hom_space, intersection_of_kernels, kernel_bases,
                             sum_of_images)

Weight = Tuple[int, ...]


def positive_part(v: Sequence[int]) -> Weight:
    return tuple(max(int(x), 0) for x in v)


def negative_part(v: Sequence[int]) -> Weight:
    return tuple(max(-int(x), 0) for x in v)


def expand(mult: Sequence[int]) -> List[int]:
    """Vertex list with multiplicity, ``(2, 0, 1) -> [1, 1, 3]``."""
    return [v + 1 for v, m in enumerate(mult) for _ in range(m)]


def weight_pairing(delta: Sequence[int], gamma: Sequence[int]) -> int:
    return sum(int(a) * int(b) for a, b in zip(delta, gamma))


@dataclass
class Presentation:
    """A map ``P(delta_-) -> P(delta_+)``; ``coeffs[r][c]`` are coordinates in ``e_j A e_i``.

    ``injective=True`` marks the Nakayama image ``I(delta_-) -> I(delta_+)``:
    the same data read as an injective presentation of weight ``-delta``.
    ``terms`` lists the summands of both sides when they share a vertex, as
    minimal presentations may; otherwise they are read off the weight.
    """

    algebra: AlgebraBasis
    weight: Weight
    coeffs: List[List[np.ndarray]]
    field: Field = QQ
    injective: bool = False
    terms: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None

    @property
    def plus(self) -> List[int]:
        return list(self.terms[0]) if self.terms is not None else expand(positive_part(self.weight))

    @property
    def minus(self) -> List[int]:
        return list(self.terms[1]) if self.terms is not None else expand(negative_part(self.weight))

    @property
    def injective_weight(self) -> Weight:
        return tuple(-x for x in self.weight)

    def over(self, field: Field) -> "Presentation":
        if field == self.field:
            return self
        if self.field != QQ:
            raise FieldMismatch(f"cannot move a presentation from {self.field} to {field}")
        coeffs = [[field.from_rational_matrix(x) for x in row] for row in self.coeffs]
        return Presentation(self.algebra, self.weight, coeffs, field, self.injective, self.terms)

    def direct_sum(self, other: "Presentation") -> "Presentation":
        """Block sum, with summands re-sorted so that vertices stay grouped."""
        w = tuple(a + b for a, b in zip(self.weight, other.weight))
        explicit = self.terms is not None or other.terms is not None
        if not explicit and any(a * b < 0 for a, b in zip(self.weight, other.weight)):
            raise DimensionMismatch("summands must have sign-compatible weights")
        plus_src = [(v, 0, r) for r, v in enumerate(self.plus)] + [(v, 1, r) for r, v in enumerate(other.plus)]
        minus_src = [(v, 0, c) for c, v in enumerate(self.minus)] + [(v, 1, c) for c, v in enumerate(other.minus)]
        plus_src.sort()
        minus_src.sort()
        F = self.field
        coeffs = []
        for v, side, r in plus_src:
            row = []
            for u, side2, c in minus_src:
                if side == side2:
                    src = self if side == 0 else other
                    row.append(src.coeffs[r][c])
                else:
                    row.append(F.zeros(1, self.algebra.dim(v, u))[0])
            coeffs.append(row)
        terms = (tuple(v for v, _, _ in plus_src), tuple(u for u, _, _ in minus_src)) if explicit else None
        return Presentation(self.algebra, w, coeffs, F, self.injective, terms)


def _zero_coeff(field: Field, n: int) -> np.ndarray:
    return field.zeros(1, n)[0]


def sample_presentation(algebra: AlgebraBasis, delta: Sequence[int], rng: np.random.Generator,
                        coeff_bound: int = 100, field: Field = QQ) -> Presentation:
    """Random integer coefficients in ``[-coeff_bound, coeff_bound]`` on every basis path."""
    delta = tuple(int(x) for x in delta)
    if len(delta) != algebra.quiver.n:
        raise DimensionMismatch("weight length differs from the vertex count")
    plus, minus = expand(positive_part(delta)), expand(negative_part(delta))
    coeffs = []
    for j in plus:
        row = []
        for i in minus:
            n = algebra.dim(j, i)
            row.append(field.random_matrix(rng, 1, n, coeff_bound)[0] if n else _zero_coeff(field, 0))
        coeffs.append(row)
    return Presentation(algebra, delta, coeffs, field)


def sample_injective_presentation(algebra: AlgebraBasis, dcheck: Sequence[int], rng: np.random.Generator,
                                  coeff_bound: int = 100, field: Field = QQ) -> Presentation:
    """General ``I(dcheck_+) -> I(dcheck_-)``, realised as the Nakayama image of weight ``-dcheck``."""
    return tau_p(sample_presentation(algebra, tuple(-int(x) for x in dcheck), rng, coeff_bound, field))


def tau_p(d: Presentation) -> Presentation:
    """Replace every ``P_i`` by ``I_i`` keeping the coefficients."""
    return Presentation(d.algebra, d.weight, d.coeffs, d.field, injective=True, terms=d.terms)


def _common_field(d: Presentation, M: Representation) -> Presentation:
    if d.field != M.field:
        d = d.over(M.field)
    if d.algebra is not M.algebra and d.algebra.quiver != M.quiver:
        raise DimensionMismatch("presentation and representation live over different quivers")
    return d


def induced_matrix(d: Presentation, M: Representation) -> np.ndarray:
    """``C(d, M)`` with row blocks ``M(minus[c])`` and column blocks ``M(plus[r])``."""
    d = _common_field(d, M)
    F = M.field
    plus, minus = d.plus, d.minus
    rows = [M.dim(i) for i in minus]
    cols = [M.dim(j) for j in plus]
    out = F.zeros(sum(rows), sum(cols))
    c0 = 0
    for r, j in enumerate(plus):
        r0 = 0
        for c, i in enumerate(minus):
            if rows[c] and cols[r]:
                out[r0:r0 + rows[c], c0:c0 + cols[r]] = M.element_matrix(j, i, d.coeffs[r][c])
            r0 += rows[c]
        c0 += cols[r]
    return out


@dataclass(frozen=True)
class HomEResult:
    hom: int
    e: int
    samples: int = 1
    coeff_bound: int = 0
    rng_seed: Optional[int] = None

    @property
    def provenance(self) -> str:
        return f"samples={self.samples} coeffBound={self.coeff_bound} rngSeed={self.rng_seed}"


def apply_presentation(d: Presentation, M: Representation) -> HomEResult:
    """``(hom(d, M), e(d, M))`` as nullity and corank of ``C(d, M)``."""
    if d.injective:
        raise ValueError("use apply_injective_presentation for injective presentations")
    C = induced_matrix(d, M)
    rank = M.field.rank(C) if C.size else 0
    return HomEResult(C.shape[1] - rank, C.shape[0] - rank)


def apply_injective_presentation(d: Presentation, M: Representation) -> HomEResult:
    """``(hom(M, d), e(M, d))`` for an injective presentation.

    ``Hom(M, I_i) = M(i)^*`` turns ``Hom(M, d)`` into the transpose of ``C``
    computed from the same coefficients.
    """
    if not d.injective:
        raise ValueError("expected an injective presentation")
    C = induced_matrix(d, M)
    rank = M.field.rank(C) if C.size else 0
    return HomEResult(C.shape[0] - rank, C.shape[1] - rank)


def _rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), int(index)])


def generic_hom_e(algebra: AlgebraBasis, delta: Sequence[int], M: Representation, samples: int = 5,
                  coeff_bound: int = 100, rng_seed: int = 0) -> HomEResult:
    """Minimum of ``hom(d, M)`` over independent samples; ``e`` follows from ``hom - e = delta . dim M``."""
    if samples < 1:
        raise ValueError("need at least one sample")
    best = None
    for s in range(samples):
        d = sample_presentation(algebra, delta, _rng(rng_seed, s), coeff_bound, M.field)
        h = apply_presentation(d, M).hom
        best = h if best is None else min(best, h)
    e = best - weight_pairing(delta, M.dims)
    return HomEResult(best, e, samples, coeff_bound, rng_seed)


def generic_hom_sequence(algebra: AlgebraBasis, delta: Sequence[int], M: Representation, samples: int = 5,
                         coeff_bound: int = 100, rng_seed: int = 0) -> List[int]:
    """Running minima of ``hom`` after each sample (non-increasing)."""
    out = []
    best = None
    for s in range(samples):
        d = sample_presentation(algebra, delta, _rng(rng_seed, s), coeff_bound, M.field)
        h = apply_presentation(d, M).hom
        best = h if best is None else min(best, h)
        out.append(best)
    return out


# modules attached to presentations

def _direct_sum_of(reps: Sequence[Representation], algebra: AlgebraBasis, field: Field) -> Representation:
    from .representation import direct_sum, zero_representation
    return direct_sum(list(reps)) if reps else zero_representation(algebra, field)


def _projective_sum(algebra: AlgebraBasis, vertices: Sequence[int], field: Field) -> Representation:
    from .representation import projective
    cache = {}
    reps = []
    for v in vertices:
        if v not in cache:
            cache[v] = projective(algebra, v, field)
        reps.append(cache[v])
    return _direct_sum_of(reps, algebra, field)


def _injective_sum(algebra: AlgebraBasis, vertices: Sequence[int], field: Field) -> Representation:
    from .representation import injective
    cache = {}
    reps = []
    for v in vertices:
        if v not in cache:
            cache[v] = injective(algebra, v, field)
        reps.append(cache[v])
    return _direct_sum_of(reps, algebra, field)


def presentation_map(d: Presentation) -> Tuple[Representation, Representation, Morphism]:
    """The morphism ``P(delta_-) -> P(delta_+)`` (or ``I(delta_-) -> I(delta_+)``) vertex by vertex."""
    alg, F = d.algebra, d.field
    plus, minus = d.plus, d.minus
    if d.injective:
        src, tgt = _injective_sum(alg, minus, F), _injective_sum(alg, plus, F)
    else:
        src, tgt = _projective_sum(alg, minus, F), _projective_sum(alg, plus, F)
    f: Morphism = {}
    for v in alg.quiver.vertices:
        if d.injective:
            rsz = [alg.dim(v, j) for j in plus]
            csz = [alg.dim(v, i) for i in minus]
        else:
            rsz = [alg.dim(j, v) for j in plus]
            csz = [alg.dim(i, v) for i in minus]
        mat = F.zeros(sum(rsz), sum(csz))
        r0 = 0
        for r, j in enumerate(plus):
            c0 = 0
            for c, i in enumerate(minus):
                if rsz[r] and csz[c]:
                    coeff = d.coeffs[r][c]
                    blk = F.zeros(rsz[r], csz[c])
                    if d.injective:
                        # dual of y -> y * coeff on (paths v->j) -> (paths v->i)
                        mats = alg.basis_right_matrices(v, j, i)
                        for k, x in enumerate(coeff):
                            if x != 0:
                                blk = F.add(blk, F.scale(x, F.from_rational_matrix(mats[k]).T))
                    else:
                        # x -> coeff * x on (paths i->v) -> (paths j->v)
                        mats = alg.basis_left_matrices(j, i, v)
                        for k, x in enumerate(coeff):
                            if x != 0:
                                blk = F.add(blk, F.scale(x, F.from_rational_matrix(mats[k])))
                    mat[r0:r0 + rsz[r], c0:c0 + csz[c]] = blk
                c0 += csz[c]
            r0 += rsz[r]
        f[v] = mat
    return src, tgt, f


def cokernel(d: Presentation) -> Representation:
    if d.injective:
        raise ValueError("cokernels are taken of projective presentations")
    _, tgt, f = presentation_map(d)
    return tgt.quotient(sum_of_images([f], tgt))


def kernel(d: Presentation) -> Representation:
    if not d.injective:
        raise ValueError("kernels are taken of injective presentations")
    src, _, f = presentation_map(d)
    return src.subrepresentation(kernel_bases(f, src))


def presentation_kernel_cokernel(d: Presentation) -> Representation:
    """Cokernel of a projective presentation, kernel of an injective one."""
    return kernel(d) if d.injective else cokernel(d)


def e_value(d: Presentation, M: Representation) -> int:
    return apply_presentation(d, M).e


def E_invariant(d1: Presentation, d2: Presentation) -> int:
    """``dim E(d1, d2) = dim Hom(Coker d2, Ker tau_p d1)``."""
    return hom_space(cokernel(d2), kernel(tau_p(d1)))[0]


def E_invariant_via_e(d1: Presentation, d2: Presentation) -> int:
    """The same number as the corank of ``C(d1, Coker d2)``."""
    return e_value(d1, cokernel(d2))


def generic_e(algebra: AlgebraBasis, delta1: Sequence[int], delta2: Sequence[int], samples: int = 3,
              coeff_bound: int = 100, rng_seed: int = 0, field: Field = QQ) -> int:
    """Minimum of ``E(d1, d2)`` over independent pairs of samples."""
    best = None
    for s in range(samples):
        d1 = sample_presentation(algebra, delta1, _rng(rng_seed, 2 * s), coeff_bound, field)
        d2 = sample_presentation(algebra, delta2, _rng(rng_seed, 2 * s + 1), coeff_bound, field)
        v = e_value(d1, cokernel(d2))
        best = v if best is None else min(best, v)
        if best == 0:
            break
    return best


def rigid_sample(algebra: AlgebraBasis, delta: Sequence[int], samples: int = 5, coeff_bound: int = 100,
                 rng_seed: int = 0, field: Field = QQ) -> Optional[Presentation]:
    for s in range(samples):
        d = sample_presentation(algebra, delta, _rng(rng_seed, s), coeff_bound, field)
        if e_value(d, cokernel(d)) == 0:
            return d
    return None


def is_rigid_weight(algebra: AlgebraBasis, delta: Sequence[int], samples: int = 5, coeff_bound: int = 100,
                    rng_seed: int = 0, field: Field = QQ) -> bool:
    """True iff some sampled ``d`` of weight ``delta`` has ``E(d, d) = 0``."""
    return rigid_sample(algebra, delta, samples, coeff_bound, rng_seed, field) is not None


def universal_image(algebra: AlgebraBasis, delta: Sequence[int], M: Representation, samples: int = 5,
                    coeff_bound: int = 100, rng_seed: int = 0) -> Representation:
    """``t_delta(M)``: image of the universal map ``Coker(d)^h -> M``."""
    d = rigid_sample(algebra, delta, samples, coeff_bound, rng_seed, M.field)
    if d is None:
        raise NonRigidWeight(f"no rigid sample of weight {tuple(delta)}")
    _, maps = hom_space(cokernel(d), M)
    return M.subrepresentation(sum_of_images(maps, M))


def universal_image_bases(algebra: AlgebraBasis, delta: Sequence[int], M: Representation, samples: int = 5,
                          coeff_bound: int = 100, rng_seed: int = 0):
    d = rigid_sample(algebra, delta, samples, coeff_bound, rng_seed, M.field)
    if d is None:
        raise NonRigidWeight(f"no rigid sample of weight {tuple(delta)}")
    _, maps = hom_space(cokernel(d), M)
    return sum_of_images(maps, M)


def universal_kernel(algebra: AlgebraBasis, delta: Sequence[int], M: Representation, samples: int = 5,
                     coeff_bound: int = 100, rng_seed: int = 0) -> Representation:
    """Dual construction: kernel of the universal map ``M -> Ker(tau_p d)^e``."""
    d = rigid_sample(algebra, delta, samples, coeff_bound, rng_seed, M.field)
    if d is None:
        raise NonRigidWeight(f"no rigid sample of weight {tuple(delta)}")
    _, maps = hom_space(M, kernel(tau_p(d)))
    return M.subrepresentation(intersection_of_kernels(maps, M))


def minimal_presentation(M: Representation) -> Presentation:
    """Minimal projective presentation, built from the projective cover and the top of its kernel."""
    alg, F = M.algebra, M.field
    q = alg.quiver
    rad = M.radical_bases()
    top_vectors = {}
    for v in q.vertices:
        comp = _complement(F, rad[v], M.dim(v))
        top_vectors[v] = comp
    plus = [v for v in q.vertices for _ in range(top_vectors[v].shape[1])]
    cover_src = _projective_sum(alg, plus, F)
    # cover map P(plus) -> M: generator of each summand goes to the chosen top vector
    gens = [top_vectors[v][:, k] for v in q.vertices for k in range(top_vectors[v].shape[1])]
    cover: Morphism = {}
    for w in q.vertices:
        cols = []
        for j, g in zip(plus, gens):
            for p in alg.basis(j, w):
                cols.append(F.matmul(M.path_matrix(p, j), g.reshape(-1, 1)))
        cover[w] = np.concatenate(cols, axis=1) if cols else F.zeros(M.dim(w), 0)
    Kb = kernel_bases(cover, cover_src)
    K = cover_src.subrepresentation(Kb)
    Krad = K.radical_bases()
    minus = []
    coeff_cols = []
    for v in q.vertices:
        comp = _complement(F, Krad[v], K.dim(v))
        for k in range(comp.shape[1]):
            vec = F.matmul(Kb[v], comp[:, k].reshape(-1, 1))[:, 0] if K.dim(v) else F.zeros(0, 1)[:, 0]
            minus.append(v)
            coeff_cols.append(vec)
    weight = [0] * q.n
    for j in plus:
        weight[j - 1] += 1
    for i in minus:
        weight[i - 1] -= 1
    coeffs = []
    for r, j in enumerate(plus):
        row = []
        for c, i in enumerate(minus):
            start = sum(alg.dim(plus[t], i) for t in range(r))
            row.append(coeff_cols[c][start:start + alg.dim(j, i)])
        coeffs.append(row)
    shared = any(plus.count(v) and minus.count(v) for v in q.vertices)
    return Presentation(alg, tuple(weight), coeffs, F, terms=(tuple(plus), tuple(minus)) if shared else None)


def _complement(F: Field, basis: np.ndarray, n: int) -> np.ndarray:
    """Standard basis vectors completing the column space of ``basis`` to ``k^n``."""
    cols = []
    current = basis if basis.shape[1] else F.zeros(n, 0)
    r = F.rank(current) if current.size else 0
    for k in range(n):
        e = F.zeros(n, 1)
        e[k, 0] = F.convert(1)
        trial = np.concatenate([current, e], axis=1)
        if F.rank(trial) > r:
            current = trial
            r += 1
            cols.append(e)
    return np.concatenate(cols, axis=1) if cols else F.zeros(n, 0)


def delta_vector(M: Representation) -> Weight:
    return minimal_presentation(M).weight


def exchange_image(d_minus: Presentation, d_plus: Presentation) -> Representation:
    """Image of the spanning map ``Coker(d_plus) -> Ker(tau_p d_minus)``."""
    if E_invariant(d_plus, d_minus) != 0:
        raise NotExchangePair("E(d_plus, d_minus) must vanish")
    N = cokernel(d_plus)
    T = kernel(tau_p(d_minus))
    dim, maps = hom_space(N, T)
    if dim != 1:
        raise NotExchangePair(f"E(d_minus, d_plus) has dimension {dim}, expected 1")
    image = T.subrepresentation(sum_of_images(maps, T))
    if hom_space(image, image)[0] != 1:
        raise AssertionError("exchange image is not a brick")
    if e_value(minimal_presentation(image), image) != 0:
        raise AssertionError("exchange image is not rigid")
    return image


@dataclass
class RigidClusters:
    """Indecomposable rigid weights in a box and their maximal compatible sets."""

    indecomposables: List[Weight]
    clusters: List[Tuple[Weight, ...]]

    def exchange_graph(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self.clusters)
        for a, b in itertools.combinations(self.clusters, 2):
            if len(set(a) & set(b)) == len(a) - 1:
                g.add_edge(a, b)
        return g


def rigid_clusters(algebra: AlgebraBasis, box: int = 2, samples: int = 2, coeff_bound: int = 100,
                   rng_seed: int = 0) -> RigidClusters:
    """Enumerate clusters by sampled rigidity inside ``[-box, box]^n``.

    A rigid weight is decomposable when it is the sum of two compatible rigid
    weights (``e`` vanishing both ways).  Clusters are sets of ``n``
    pairwise-compatible indecomposable rigid weights of full rank.
    """
    n = algebra.quiver.n
    cache: dict = {}

    def e(x, y):
        key = (x, y)
        if key not in cache:
            cache[key] = generic_e(algebra, x, y, samples, coeff_bound, rng_seed)
        return cache[key]

    def compatible(x, y):
        return e(x, y) == 0 and e(y, x) == 0

    box_points = [v for v in itertools.product(range(-box, box + 1), repeat=n) if any(v)]
    rigid = [v for v in box_points if e(v, v) == 0]
    rigid_set = set(rigid)
    indecomposables = []
    for v in rigid:
        if not any(tuple(a - b for a, b in zip(v, x)) in rigid_set
                   and compatible(x, tuple(a - b for a, b in zip(v, x))) for x in rigid if x != v):
            indecomposables.append(v)
    indecomposables.sort()
    clusters = []

    def extend(chosen: List[Weight], start: int):
        if len(chosen) == n:
            if integer_rank(chosen) == n:
                clusters.append(tuple(chosen))
            return
        for i in range(start, len(indecomposables)):
            w = indecomposables[i]
            if all(compatible(w, c) for c in chosen):
                extend(chosen + [w], i + 1)

    extend([], 0)
    return RigidClusters(indecomposables, clusters)
