"""Seed mutation, bounded exchange-graph search and cluster-based vertex recovery.

Conventions.  ``B[u][v]`` counts arrows ``u -> v`` minus arrows ``v -> u``.  A
seed stores the cluster's weight vectors as the rows of ``G`` and the signed
c-vectors as the rows of ``C = (G^-1)^T``; the initial seed is the negative
cluster ``G = C = -I``.  Mutation at ``k`` uses the sign ``eps`` of the k-th
c-row:

    g'_k = -g_k + sum_i [eps * B[i][k]]_+ g_i
    c'_k = -c_k,   c'_j = c_j + [-eps * B[k][j]]_+ c_k   (j != k)

and ``B`` mutates by the usual matrix mutation.  Vertex indices are 1-based
in every public function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import (IndexOutOfRange, LedgerIncomplete, NonIntegralResult, NotSkewSymmetric,
                     NotUnimodular, OrientationUndecided, SignCoherenceBroken)
from .fields import QQ
from .polytope import LatticePolytope, convex_hull, dot

Matrix = Tuple[Tuple[int, ...], ...]


def _pos(x: int) -> int:
    return x if x > 0 else 0


def as_matrix(rows: Iterable[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


def identity(n: int, sign: int = 1) -> Matrix:
    return tuple(tuple(sign if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(r, c) for c in bt) for r in a)


def determinant(m: Matrix) -> int:
    n = len(m)
    if n == 0:
        return 1
    R, piv = QQ.rref(QQ.array([list(r) for r in m]))
    if len(piv) < n:
        return 0
    # Bareiss elimination keeps everything integral
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next(i for i in range(k + 1, n) if a[i][k] != 0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def integer_inverse(m: Matrix) -> Matrix:
    if abs(determinant(m)) != 1:
        raise NotUnimodular(f"determinant {determinant(m)} is not +-1")
    inv = QQ.inverse(QQ.array([list(r) for r in m]))
    return tuple(tuple(int(inv[i, j]) for j in range(len(m))) for i in range(len(m)))


def check_skew(B: Matrix) -> None:
    n = len(B)
    if any(len(r) != n for r in B) or any(B[i][j] != -B[j][i] for i in range(n) for j in range(n)):
        raise NotSkewSymmetric("exchange matrix is not skew-symmetric")


def _index(k: int, n: int) -> int:
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"mutation index {k} outside 1..{n}")
    return k - 1


def mutate_B(B: Sequence[Sequence[int]], k: int) -> Matrix:
    B = as_matrix(B)
    n = len(B)
    k = _index(k, n)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-B[i][j])
            else:
                row.append(B[i][j] + (abs(B[i][k]) * B[k][j] + B[i][k] * abs(B[k][j])) // 2)
        out.append(tuple(row))
    return tuple(out)


def row_sign(row: Sequence[int]) -> int:
    if all(x >= 0 for x in row) and any(row):
        return 1
    if all(x <= 0 for x in row) and any(row):
        return -1
    raise SignCoherenceBroken(f"c-vector {tuple(row)} is not sign-coherent")


def dual_c_vectors(G: Sequence[Sequence[int]]) -> Matrix:
    """``C = (G^-1)^T``; raises unless every row is sign-coherent."""
    C = transpose(integer_inverse(as_matrix(G)))
    for r in C:
        row_sign(r)
    return C


@dataclass(frozen=True)
class Seed:
    B: Matrix
    G: Matrix
    C: Matrix
    history: Tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return len(self.B)

    def canonical(self) -> Matrix:
        return tuple(sorted(self.G))

    def cluster(self) -> List[Tuple[int, ...]]:
        return list(self.G)


def initial_seed(B: Sequence[Sequence[int]]) -> Seed:
    B = as_matrix(B)
    check_skew(B)
    n = len(B)
    return Seed(B, identity(n, -1), identity(n, -1), ())


def mutate_seed(seed: Seed, k: int, check: bool = True) -> Seed:
    n = seed.n
    kk = _index(k, n)
    B, G, C = seed.B, seed.G, seed.C
    eps = row_sign(C[kk])
    gk = [-x for x in G[kk]]
    for i in range(n):
        w = _pos(eps * B[i][kk])
        if w:
            gk = [x + w * y for x, y in zip(gk, G[i])]
    newG = tuple(tuple(gk) if i == kk else G[i] for i in range(n))
    newC = []
    for j in range(n):
        if j == kk:
            newC.append(tuple(-x for x in C[kk]))
        else:
            w = _pos(-eps * B[kk][j])
            newC.append(tuple(x + w * y for x, y in zip(C[j], C[kk])) if w else C[j])
    out = Seed(mutate_B(B, k), newG, tuple(newC), seed.history + (k,))
    if check:
        if abs(determinant(newG)) != 1:
            raise SignCoherenceBroken(f"mutated G has determinant {determinant(newG)}")
        if matmul(newG, transpose(out.C)) != identity(n):
            raise SignCoherenceBroken("mutated C is not dual to mutated G")
        for r in out.C:
            row_sign(r)
    return out


def mutate_along(seed: Seed, sequence: Iterable[int]) -> Seed:
    for k in sequence:
        seed = mutate_seed(seed, k)
    return seed


@dataclass
class ClusterRecord:
    canonical: Matrix
    seed: Seed
    rigid: Optional[bool] = None

    @property
    def sequence(self) -> Tuple[int, ...]:
        return self.seed.history


def cluster_search(B: Sequence[Sequence[int]], max_depth: int = 10, norm_bound: int = 20,
                   limit: Optional[int] = None) -> Dict[Matrix, ClusterRecord]:
    """Breadth-first closure of mutation from the negative cluster.

    A seed whose G has an entry of absolute value above ``norm_bound`` is kept
    out of the result and not expanded.
    """
    start = initial_seed(B)
    found: Dict[Matrix, ClusterRecord] = {start.canonical(): ClusterRecord(start.canonical(), start)}
    queue = deque([start])
    while queue:
        seed = queue.popleft()
        if len(seed.history) >= max_depth:
            continue
        for k in range(1, seed.n + 1):
            if seed.history and seed.history[-1] == k:
                continue
            nxt = mutate_seed(seed, k)
            key = nxt.canonical()
            if key in found or max(abs(x) for r in nxt.G for x in r) > norm_bound:
                continue
            found[key] = ClusterRecord(key, nxt)
            queue.append(nxt)
            if limit is not None and len(found) >= limit:
                return found
    return found


def vertex_recovery(G: Sequence[Sequence[int]], h: Sequence[int]) -> Tuple[int, ...]:
    """The vector ``gamma`` with ``G gamma = h``, i.e. ``delta_i . gamma = h_i`` for every row."""
    G = as_matrix(G)
    if abs(determinant(G)) != 1:
        raise NotUnimodular(f"cluster matrix has determinant {determinant(G)}")
    sol = QQ.solve(QQ.array([list(r) for r in G]), QQ.array([[int(x)] for x in h]))
    out = []
    for x in sol[:, 0]:
        x = Fraction(x)
        if x.denominator != 1:
            raise NonIntegralResult(f"recovered vertex has entry {x}")
        out.append(int(x))
    return tuple(out)


def generic_newton_via_clusters(hom_fn: Callable[[Tuple[int, ...]], int], B: Sequence[Sequence[int]],
                                max_depth: int = 10, norm_bound: int = 20,
                                clusters: Optional[Dict[Matrix, ClusterRecord]] = None) -> LatticePolytope:
    """Hull of the vertices recovered from every reachable cluster.

    ``hom_fn(delta)`` returns ``hom(delta, M)``.  Each candidate must maximize
    every weight of its cluster over the final hull.
    """
    clusters = clusters if clusters is not None else cluster_search(B, max_depth, norm_bound)
    cache: Dict[Tuple[int, ...], int] = {}

    def h(d):
        if d not in cache:
            cache[d] = int(hom_fn(d))
        return cache[d]

    candidates = {}
    for key, rec in clusters.items():
        candidates[key] = vertex_recovery(key, [h(d) for d in key])
    P = convex_hull(candidates.values())
    for key, v in candidates.items():
        for d in key:
            if dot(d, v) != P.support(d):
                raise NonIntegralResult(f"candidate {v} does not maximize {d} over the hull")
    return P


def recovered_vertices(hom_fn, clusters: Dict[Matrix, ClusterRecord]) -> Dict[Matrix, Tuple[int, ...]]:
    return {key: vertex_recovery(key, [int(hom_fn(d)) for d in key]) for key in clusters}


def mutate_weight(delta: Sequence[int], B: Sequence[Sequence[int]], k: int) -> Tuple[int, ...]:
    """Coordinate change of a weight vector under mutation at ``k``.

    ``d'_k = -d_k`` and ``d'_j = d_j + [B[j][k]]_+ d_k - B[j][k] [d_k]_+`` for ``j != k``.
    """
    B = as_matrix(B)
    kk = _index(k, len(B))
    d = [int(x) for x in delta]
    out = []
    for j in range(len(d)):
        if j == kk:
            out.append(-d[kk])
        else:
            b = B[j][kk]
            out.append(d[j] + _pos(b) * d[kk] - b * _pos(d[kk]))
    return tuple(out)


@dataclass(frozen=True)
class TropicalLedger:
    """A weight ``delta`` with the dual weight ``dual`` of a representation and ``f = f_M(delta)``."""

    B: Matrix
    delta: Tuple[int, ...]
    dual: Tuple[int, ...]
    value: int


def tropical_transport(ledger: TropicalLedger, k: int) -> TropicalLedger:
    """Move ``f_M(delta)`` to the mutated seed without re-sampling.

    The weight moves by ``mutate_weight`` with ``B`` and the dual weight with
    ``-B``; the value changes by ``[d'_k]_+ [u'_k]_+ - [d_k]_+ [u_k]_+``.
    """
    if ledger.delta is None or ledger.dual is None or ledger.value is None:
        raise LedgerIncomplete("ledger needs delta, dual weight and value")
    if len(ledger.delta) != len(ledger.B) or len(ledger.dual) != len(ledger.B):
        raise LedgerIncomplete("ledger vectors do not match the exchange matrix")
    kk = _index(k, len(ledger.B))
    negB = tuple(tuple(-x for x in r) for r in ledger.B)
    d2 = mutate_weight(ledger.delta, ledger.B, k)
    u2 = mutate_weight(ledger.dual, negB, k)
    value = ledger.value + _pos(d2[kk]) * _pos(u2[kk]) - _pos(ledger.delta[kk]) * _pos(ledger.dual[kk])
    return TropicalLedger(mutate_B(ledger.B, k), d2, u2, value)


def exchange_pairs(clusters: Dict[Matrix, ClusterRecord]) -> List[Tuple[Matrix, Matrix, Tuple[int, ...], Tuple[int, ...]]]:
    """Pairs of clusters sharing all but one row, with the two differing rows."""
    keys = sorted(clusters)
    out = []
    for i, a in enumerate(keys):
        sa = set(a)
        for b in keys[i + 1:]:
            sb = set(b)
            if len(sa & sb) == len(a) - 1:
                (x,) = sa - sb
                (y,) = sb - sa
                out.append((a, b, x, y))
    return out


def exchange_quiver(clusters: Dict[Matrix, ClusterRecord],
                    e_fn: Callable[[Tuple[int, ...], Tuple[int, ...]], int]) -> nx.DiGraph:
    """Orient each exchange pair by ``e(d_-, d_+) > 0``; ``e_fn(d1, d2)`` is the sampled ``e``."""
    g = nx.DiGraph()
    g.add_nodes_from(sorted(clusters))
    for a, b, x, y in exchange_pairs(clusters):
        exy, eyx = e_fn(x, y), e_fn(y, x)
        if (exy > 0) == (eyx > 0):
            raise OrientationUndecided(f"e({x},{y}) = {exy} and e({y},{x}) = {eyx}")
        if exy > 0:
            g.add_edge(a, b, minus=x, plus=y)
        else:
            g.add_edge(b, a, minus=y, plus=x)
    return g
