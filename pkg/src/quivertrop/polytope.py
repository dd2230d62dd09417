"""Exact lattice polytopes, normal fans and edge quivers.

Everything is integer arithmetic on Python ints.  The core routine is a
double description step: the extreme rays of a pointed cone ``{x : A x >= 0}``
are built by inserting the rows of ``A`` one at a time.  Convex hulls and cone
duals are both read off from it, in coordinates reduced to the linear (or
affine) span of the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import DimensionMismatch, EmptyInput, IncomparableEdge, VertexNotInP
from .fields import QQ

Vector = Tuple[int, ...]
MAX_AMBIENT_DIM = 8


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(int(x) * int(y) for x, y in zip(a, b))


def primitive(v: Sequence) -> Vector:
    """Scale a rational vector to a primitive integer vector, keeping direction."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def canonical_sign(v: Vector) -> Vector:
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def _rank(rows: Sequence[Sequence[int]]) -> int:
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return QQ.rank(QQ.array(rows))


def _rref(rows: Sequence[Sequence[int]]):
    R, piv = QQ.rref(QQ.array([list(r) for r in rows]))
    return R[: len(piv)], piv


def _nullspace(rows: Sequence[Sequence[int]], n: int) -> List[Vector]:
    """Primitive integer basis of ``{x : r . x = 0}``."""
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    N = QQ.nullspace(QQ.array([list(r) for r in rows]))
    return [canonical_sign(primitive(N[:, j])) for j in range(N.shape[1])]


def extreme_rays(A: Sequence[Sequence[int]]) -> List[Vector]:
    """Extreme rays of the pointed cone ``{x : A x >= 0}``; ``A`` needs full column rank."""
    A = [tuple(int(x) for x in r) for r in A]
    if not A:
        raise ValueError("empty constraint system")
    k = len(A[0])
    basis: List[int] = []
    for i in range(len(A)):
        if _rank([A[j] for j in basis + [i]]) > len(basis):
            basis.append(i)
        if len(basis) == k:
            break
    if len(basis) < k:
        raise ValueError("constraint matrix is not of full column rank")
    inv = QQ.inverse(QQ.array([list(A[i]) for i in basis]))
    rays = [primitive(inv[:, j]) for j in range(k)]
    done = list(basis)
    zero = [frozenset(i for i in done if dot(A[i], r) == 0) for r in rays]
    for i in range(len(A)):
        if i in basis:
            continue
        a = A[i]
        vals = [dot(a, r) for r in rays]
        pos = [j for j, x in enumerate(vals) if x > 0]
        neg = [j for j, x in enumerate(vals) if x < 0]
        keep = [j for j, x in enumerate(vals) if x >= 0]
        new_rays = [rays[j] for j in keep]
        new_zero = [zero[j] | ({i} if vals[j] == 0 else frozenset()) for j in keep]
        for p in pos:
            for q in neg:
                common = zero[p] & zero[q]
                if len(common) < k - 2:
                    continue
                if any(j != p and j != q and common <= zero[j] for j in range(len(rays))):
                    continue
                r = primitive([vals[p] * y - vals[q] * x for x, y in zip(rays[p], rays[q])])
                new_rays.append(r)
                new_zero.append(common | {i})
        rays, zero = new_rays, new_zero
        done.append(i)
    return sorted(set(rays))


def _span_reduction(vectors: Sequence[Sequence[int]]):
    """Row echelon basis of the span and its pivot columns."""
    if not vectors or _rank(vectors) == 0:
        return [], []
    R, piv = _rref(vectors)
    return R, piv


def dual_generators(generators: Sequence[Sequence[int]], n: int) -> List[Vector]:
    """Generators of the dual cone ``{u : u . g >= 0}``; lineality appears as ``u, -u`` pairs."""
    gens = [tuple(int(x) for x in g) for g in generators if any(g)]
    if not gens:
        out = []
        for i in range(n):
            e = tuple(1 if j == i else 0 for j in range(n))
            out += [e, tuple(-x for x in e)]
        return out
    _, piv = _span_reduction(gens)
    reduced = [tuple(g[j] for j in piv) for g in gens]
    out = []
    for r in extreme_rays(reduced):
        u = [0] * n
        for j, x in zip(piv, r):
            u[j] = x
        out.append(tuple(u))
    for w in _nullspace(gens, n):
        out += [w, tuple(-x for x in w)]
    return sorted(set(out))


@dataclass(frozen=True)
class Cone:
    """Polyhedral cone stored by generators and by inequalities ``u . x >= 0``."""

    ambient_dim: int
    generators: Tuple[Vector, ...]
    inequalities: Tuple[Vector, ...]

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], n: int) -> "Cone":
        gens = tuple(sorted({primitive(g) for g in gens if any(g)}))
        return cls(n, gens, tuple(dual_generators(gens, n)))

    @classmethod
    def from_inequalities(cls, ineqs: Iterable[Sequence[int]], n: int) -> "Cone":
        ineqs = tuple(sorted({primitive(u) for u in ineqs if any(u)}))
        return cls(n, tuple(dual_generators(ineqs, n)), ineqs)

    def contains(self, x: Sequence[int]) -> bool:
        return all(dot(u, x) >= 0 for u in self.inequalities)

    def dimension(self) -> int:
        return _rank(self.generators) if self.generators else 0

    def lineality(self) -> List[Vector]:
        gs = set(self.generators)
        return [g for g in self.generators if tuple(-x for x in g) in gs]

    def same_as(self, other: "Cone") -> bool:
        return all(other.contains(g) for g in self.generators) and all(self.contains(g) for g in other.generators)

    def face(self, functional: Sequence[int]) -> "Cone":
        """Face cut out by a valid inequality ``functional . x >= 0``."""
        return Cone.from_generators([g for g in self.generators if dot(functional, g) == 0], self.ambient_dim)

    def rays(self) -> List[Vector]:
        lin = set(self.lineality())
        return [g for g in self.generators if g not in lin]


def cone_contains(cone: Cone, delta: Sequence[int]) -> bool:
    return cone.contains(delta)


def cone_intersection(c1: Cone, c2: Cone) -> Cone:
    n = c1.ambient_dim
    ineqs = set(c1.inequalities) | set(c2.inequalities)
    return Cone(n, tuple(dual_generators(sorted(ineqs), n)), tuple(sorted(ineqs)))


def _is_face(c: Cone, sub: Cone) -> bool:
    tight = [u for u in c.inequalities if all(dot(u, g) == 0 for g in sub.generators)]
    smallest = [g for g in c.generators if all(dot(u, g) == 0 for u in tight)]
    return all(sub.contains(g) for g in smallest)


def cones_intersect_in_face(c1: Cone, c2: Cone) -> bool:
    """True iff ``c1 & c2`` is a face of both cones."""
    if c1.ambient_dim != c2.ambient_dim:
        raise DimensionMismatch("cones live in different ambient spaces")
    meet = cone_intersection(c1, c2)
    return _is_face(c1, meet) and _is_face(c2, meet)


@dataclass
class LatticePolytope:
    ambient_dim: int
    vertices: Tuple[Vector, ...]
    facets: Tuple[Tuple[Vector, int], ...]
    equations: Tuple[Tuple[Vector, int], ...]
    dim: int
    edges: FrozenSet[Tuple[Vector, Vector]]
    _tight: Dict[Vector, FrozenSet[int]] = field(default_factory=dict, repr=False)

    def contains(self, x: Sequence[int]) -> bool:
        return (all(dot(a, x) == b for a, b in self.equations)
                and all(dot(a, x) <= b for a, b in self.facets))

    def support(self, delta: Sequence[int]) -> int:
        return max(dot(delta, v) for v in self.vertices)

    def maximizing_vertices(self, delta: Sequence[int]) -> List[Vector]:
        best = self.support(delta)
        return [v for v in self.vertices if dot(delta, v) == best]

    def neighbours(self, v: Vector) -> List[Vector]:
        return sorted({b for a, b in self.edges if a == v} | {a for a, b in self.edges if b == v})

    def incident_facets(self, v: Vector) -> List[Tuple[Vector, int]]:
        return [self.facets[i] for i in sorted(self._tight[v])]

    def export(self) -> str:
        lines = [f"vertices {len(self.vertices)}"]
        lines += [" ".join(map(str, v)) for v in self.vertices]
        lines.append(f"facets {len(self.facets)}")
        lines += [" ".join(map(str, a)) + f" <= {b}" for a, b in self.facets]
        if self.equations:
            lines.append(f"equations {len(self.equations)}")
            lines += [" ".join(map(str, a)) + f" = {b}" for a, b in self.equations]
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LatticePolytope) and self.vertices == other.vertices
                and self.ambient_dim == other.ambient_dim)


def convex_hull(points: Iterable[Sequence[int]]) -> LatticePolytope:
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise EmptyInput("convex hull of the empty set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points of different lengths")
    if n > MAX_AMBIENT_DIM:
        raise DimensionMismatch(f"ambient dimension {n} exceeds {MAX_AMBIENT_DIM}")
    base = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in pts[1:]]
    R, piv = _span_reduction(diffs)
    k = len(piv)
    equations = []
    for w in _nullspace(diffs, n) if diffs else _nullspace([], n):
        equations.append((w, dot(w, base)))
    if k == 0:
        return LatticePolytope(n, (base,), (), tuple(sorted(equations)), 0, frozenset(), {base: frozenset()})
    rows = [tuple(-p[j] for j in piv) + (1,) for p in pts]
    facets = []
    for r in extreme_rays(rows):
        a_red, b = r[:-1], r[-1]
        if not any(a_red):
            continue
        a = [0] * n
        for j, x in zip(piv, a_red):
            a[j] = x
        facets.append((tuple(a), b))
    facets.sort()
    tight = {p: frozenset(i for i, (a, b) in enumerate(facets) if dot(a, p) == b) for p in pts}
    red = [tuple(a[j] for j in piv) for a, _ in facets]
    verts = [p for p in pts if tight[p] and _rank([red[i] for i in tight[p]]) == k]
    edges = set()
    for v, w in combinations(verts, 2):
        common = tight[v] & tight[w]
        if k == 1 or (common and _rank([red[i] for i in common]) == k - 1):
            if k == 1 or not any(u != v and u != w and common <= tight[u] for u in verts):
                edges.add((v, w))
    return LatticePolytope(n, tuple(verts), tuple(facets), tuple(sorted(equations)), k,
                           frozenset(edges), {v: tight[v] for v in verts})


def normal_cone(P: LatticePolytope, vertex: Sequence[int]) -> Cone:
    """``{delta : delta . v >= delta . w for all vertices w}``, with generators from incident facets."""
    v = tuple(int(x) for x in vertex)
    if v not in P._tight:
        raise VertexNotInP(f"{v} is not a vertex")
    gens = [a for a, _ in P.incident_facets(v)]
    for a, _ in P.equations:
        gens += [a, tuple(-x for x in a)]
    ineqs = [tuple(x - y for x, y in zip(v, w)) for w in P.neighbours(v)]
    return Cone(P.ambient_dim, tuple(sorted({primitive(g) for g in gens if any(g)})),
                tuple(sorted({primitive(u) for u in ineqs})))


@dataclass
class NormalFan:
    polytope: LatticePolytope
    cones: Dict[Vector, Cone]

    def cone_of(self, delta: Sequence[int]) -> List[Vector]:
        return [v for v, c in self.cones.items() if c.contains(delta)]

    def rays(self) -> List[Vector]:
        lin = set()
        out = set()
        for c in self.cones.values():
            lin |= set(c.lineality())
            out |= set(c.generators)
        return sorted(out - lin)

    def export(self) -> str:
        lines = []
        for v, c in sorted(self.cones.items()):
            lines.append("vertex " + " ".join(map(str, v)))
            lines += ["  " + " ".join(map(str, g)) for g in c.generators]
        return "\n".join(lines)


def normal_fan(P: LatticePolytope) -> NormalFan:
    return NormalFan(P, {v: normal_cone(P, v) for v in P.vertices})


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass
class EdgeQuiver:
    nodes: Tuple[Vector, ...]
    arrows: Tuple[Tuple[Vector, Vector], ...]

    def factor(self, arrow: Tuple[Vector, Vector]) -> Vector:
        return tuple(y - x for x, y in zip(*arrow))

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from(self.arrows)
        return g

    def maximal_paths(self) -> List[List[Vector]]:
        """Paths from the unique source to the unique sink."""
        g = self.graph()
        sources = [v for v in g if g.in_degree(v) == 0]
        sinks = [v for v in g if g.out_degree(v) == 0]
        out = []
        for s in sources:
            for t in sinks:
                if s == t:
                    out.append([s])
                else:
                    out += [list(p) for p in nx.all_simple_paths(g, s, t)]
        return sorted(out)


def edge_quiver(P: LatticePolytope) -> EdgeQuiver:
    arrows = []
    for v, w in sorted(P.edges):
        if leq(v, w):
            arrows.append((v, w))
        elif leq(w, v):
            arrows.append((w, v))
        else:
            raise IncomparableEdge(f"edge {v} -- {w} has incomparable endpoints")
    return EdgeQuiver(P.vertices, tuple(sorted(arrows)))


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    if P.ambient_dim != Q.ambient_dim:
        raise DimensionMismatch("Minkowski sum of polytopes in different ambient spaces")
    return convex_hull({tuple(a + b for a, b in zip(v, w)) for v in P.vertices for w in Q.vertices})

