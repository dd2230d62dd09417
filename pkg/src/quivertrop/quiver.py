"""Quivers, the Euler form, and path bases of bound quiver algebras.

Paths are tuples of arrow labels in the order the arrows are applied, so
``("a", "b")`` means "a then b".  Trivial paths are the empty tuple, with
the vertex carried alongside.

Modules are right modules over ``A = kQ/I``.  In representation terms the
indecomposable projective ``P_i`` has ``P_i(v) = e_i A e_v``, spanned by the
paths ``i -> v``, and ``Hom(P_i, M)`` is identified with ``M(i)`` by
evaluation at the trivial path.  Consequently ``Hom(P_i, P_j) = e_j A e_i``
is spanned by the paths ``j -> i``, acting by left multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import CycleWithoutRelations, DimensionMismatch, InputError, NonAdmissible, NotAcyclic
from .fields import QQ

Path = Tuple[str, ...]


@dataclass(frozen=True)
class Arrow:
    label: str
    source: int
    target: int


class Quiver:
    """A finite quiver with vertices ``1..n`` and labelled arrows."""

    def __init__(self, n: int, arrows: Iterable[Sequence]):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        self.n = n
        self.arrows: Tuple[Arrow, ...] = tuple(a if isinstance(a, Arrow) else Arrow(str(a[0]), int(a[1]), int(a[2]))
                                               for a in arrows)
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise InputError("arrow labels must be unique")
        for a in self.arrows:
            if not (1 <= a.source <= n and 1 <= a.target <= n):
                raise InputError(f"arrow {a.label} has an invalid endpoint")
        self._by_label = {a.label: a for a in self.arrows}

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def arrow(self, label: str) -> Arrow:
        return self._by_label[label]

    def __repr__(self) -> str:
        body = ", ".join(f"{a.label}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({self.n}; {body})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Quiver) and self.n == other.n and self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash((self.n, self.arrows))

    def outgoing(self, v: int) -> List[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def incoming(self, v: int) -> List[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def arrow_count(self, u: int, v: int) -> int:
        return sum(1 for a in self.arrows if a.source == u and a.target == v)

    def path_endpoints(self, path: Path, start: Optional[int] = None) -> Tuple[int, int]:
        if not path:
            if start is None:
                raise InputError("trivial path needs an explicit vertex")
            return start, start
        for x, y in zip(path, path[1:]):
            if self.arrow(x).target != self.arrow(y).source:
                raise InputError(f"path {'*'.join(path)} is not composable")
        return self.arrow(path[0]).source, self.arrow(path[-1]).target

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

    def topological_order(self) -> Optional[List[int]]:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        ready = [v for v in self.vertices if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self.outgoing(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
        return order if len(order) == self.n else None

    def paths_from(self, v: int, max_length: int) -> List[Path]:
        """All paths starting at ``v`` of length at most ``max_length``, shortest first."""
        out: List[Path] = [()]
        frontier: List[Tuple[Path, int]] = [((), v)]
        for _ in range(max_length):
            nxt = []
            for p, end in frontier:
                for a in self.outgoing(end):
                    nxt.append((p + (a.label,), a.target))
            out.extend(p for p, _ in nxt)
            frontier = nxt
        return out

    def exchange_matrix(self) -> List[List[int]]:
        """``B(u, v) = #arrows u->v - #arrows v->u``."""
        return [[self.arrow_count(u, v) - self.arrow_count(v, u) for v in self.vertices] for u in self.vertices]

    def opposite(self) -> "Quiver":
        return Quiver(self.n, [Arrow(a.label, a.target, a.source) for a in self.arrows])


def euler_form(quiver: Quiver, x: Sequence[int], y: Sequence[int]) -> int:
    """``<x, y> = sum_v x(v) y(v) - sum_{u->v} x(u) y(v)``; defined for acyclic quivers."""
    if not quiver.is_acyclic():
        raise NotAcyclic("the Euler form is only used for acyclic quivers")
    if len(x) != quiver.n or len(y) != quiver.n:
        raise DimensionMismatch("vector length differs from the vertex count")
    total = sum(int(a) * int(b) for a, b in zip(x, y))
    for arr in quiver.arrows:
        total -= int(x[arr.source - 1]) * int(y[arr.target - 1])
    return total


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths of length at least two."""

    terms: Tuple[Tuple[Fraction, Path], ...]

    @classmethod
    def of(cls, *terms) -> "Relation":
        """``Relation.of("a*b")`` or ``Relation.of((1, "a*b"), (-1, "c*d"))``."""
        out = []
        for t in terms:
            if isinstance(t, str):
                t = (1, t)
            coef, path = t
            if isinstance(path, str):
                path = tuple(path.split("*"))
            out.append((Fraction(coef), tuple(path)))
        return cls(tuple(out))

    def __str__(self) -> str:
        return " + ".join(f"{c}*{'*'.join(p)}" if c != 1 else "*".join(p) for c, p in self.terms)


@dataclass(frozen=True)
class RelationSet:
    relations: Tuple[Relation, ...] = ()
    path_length_bound: int = 12


class AlgebraBasis:
    """Path bases of ``e_s A e_t`` for ``A = kQ/I`` together with its multiplication.

    ``basis(s, t)`` lists reduced paths ``s -> t``; ``coordinates`` expresses
    any combination of paths in that basis.  The quotient basis is chosen
    among the shortest paths, ties broken lexicographically.
    """

    def __init__(self, quiver: Quiver, relations: RelationSet = RelationSet()):
        self.quiver = quiver
        self.relations = relations
        bound = relations.path_length_bound
        if quiver.is_acyclic():
            bound = max(bound, quiver.n)
        self.bound = bound
        self._validate_relations()
        self._all_paths: Dict[Tuple[int, int], List[Path]] = {}
        for s in quiver.vertices:
            for p in quiver.paths_from(s, bound):
                _, t = quiver.path_endpoints(p, s)
                self._all_paths.setdefault((s, t), []).append(p)
        self._pairs: Dict[Tuple[int, int], Tuple[List[Path], Dict[Path, int], np.ndarray, List[int], Dict[Path, int]]] = {}
        for s in quiver.vertices:
            for t in quiver.vertices:
                self._pairs[(s, t)] = self._reduce_pair(s, t)
        self._check_admissible()
        self._mult_cache: Dict[tuple, object] = {}

    def _validate_relations(self) -> None:
        for rel in self.relations.relations:
            ends = set()
            for coef, path in rel.terms:
                if len(path) < 2:
                    raise NonAdmissible("relations must be combinations of paths of length at least two")
                for lab in path:
                    if lab not in {a.label for a in self.quiver.arrows}:
                        raise InputError(f"unknown arrow {lab!r} in relation")
                ends.add(self.quiver.path_endpoints(path))
            if len(ends) > 1:
                raise InputError(f"relation {rel} mixes paths with different endpoints")

    def _reduce_pair(self, s: int, t: int):
        paths = sorted(self._all_paths.get((s, t), []), key=lambda p: (-len(p), p))
        col = {p: i for i, p in enumerate(paths)}
        gens = []
        for rel in self.relations.relations:
            rs, rt = self.quiver.path_endpoints(rel.terms[0][1])
            for u in self._all_paths.get((s, rs), []):
                for w in self._all_paths.get((rt, t), []):
                    vec = [Fraction(0)] * len(paths)
                    nonzero = False
                    for coef, p in rel.terms:
                        q = u + p + w
                        if q in col:
                            vec[col[q]] += coef
                            nonzero = nonzero or coef != 0
                    if nonzero:
                        gens.append(vec)
        if gens:
            r, pivots = QQ.rref(QQ.array(gens))
            r = r[: len(pivots)]
        else:
            r, pivots = QQ.zeros(0, len(paths)), []
        pivset = set(pivots)
        standard = sorted((p for p in paths if col[p] not in pivset), key=lambda p: (len(p), p))
        std_index = {p: i for i, p in enumerate(standard)}
        return standard, std_index, r, pivots, col

    def _exact_generators(self, s: int, t: int, col: Dict[Path, int], width: int) -> List[List[Fraction]]:
        """Products ``u * rel * w`` from ``s`` to ``t`` none of whose terms exceeds the length bound."""
        gens = []
        for rel in self.relations.relations:
            rs, rt = self.quiver.path_endpoints(rel.terms[0][1])
            for u in self._all_paths.get((s, rs), []):
                for w in self._all_paths.get((rt, t), []):
                    qs = [(coef, u + p + w) for coef, p in rel.terms]
                    if all(q in col for _, q in qs):
                        vec = [Fraction(0)] * width
                        for coef, q in qs:
                            vec[col[q]] += coef
                        gens.append(vec)
        return gens

    def _check_admissible(self) -> None:
        """Every path of the bound length must lie in the ideal itself, not only modulo longer paths."""
        for (s, t), paths in self._all_paths.items():
            longest = [p for p in paths if len(p) == self.bound]
            if not longest:
                continue
            if not self.relations.relations:
                if not self.quiver.is_acyclic():
                    raise CycleWithoutRelations("the quiver has an oriented cycle and no relations")
                continue
            col = {p: i for i, p in enumerate(paths)}
            gens = self._exact_generators(s, t, col, len(paths))
            rank = QQ.rank(QQ.array(gens)) if gens else 0
            rows = []
            for p in longest:
                row = [Fraction(0)] * len(paths)
                row[col[p]] = Fraction(1)
                rows.append(row)
            if QQ.rank(QQ.array(gens + rows)) != rank:
                raise NonAdmissible(f"paths of length {self.bound} do not all lie in the relation ideal;"
                                    " raise the path bound or check the relations")

    def basis(self, s: int, t: int) -> List[Path]:
        """Reduced paths spanning ``e_s A e_t`` (paths from ``s`` to ``t``)."""
        return self._pairs[(s, t)][0]

    def dim(self, s: int, t: int) -> int:
        return len(self._pairs[(s, t)][0])

    @cached_property
    def total_dimension(self) -> int:
        return sum(len(v[0]) for v in self._pairs.values())

    def coordinates(self, s: int, t: int, combination) -> np.ndarray:
        """Coordinates (rational) of a path combination ``{path: coef}`` from ``s`` to ``t``."""
        standard, std_index, r, pivots, col = self._pairs[(s, t)]
        vec = np.array([Fraction(0)] * len(col), dtype=object)
        if isinstance(combination, tuple):
            combination = {combination: 1}
        for p, c in combination.items():
            if p in col:
                vec[col[p]] += Fraction(c)
            elif len(p) <= self.bound:
                raise InputError(f"path {p} does not run from {s} to {t}")
        for i, pc in enumerate(pivots):
            if vec[pc] != 0:
                vec = vec - vec[pc] * r[i]
        out = np.array([Fraction(0)] * len(standard), dtype=object)
        for p, i in std_index.items():
            out[i] = vec[col[p]]
        return out

    def multiplication(self, s: int, m: int, t: int) -> Dict[Tuple[int, int], np.ndarray]:
        """Structure constants ``basis(s,m)[i] * basis(m,t)[j]`` in ``basis(s,t)``."""
        key = (s, m, t)
        if key not in self._mult_cache:
            table = {}
            for i, p in enumerate(self.basis(s, m)):
                for j, q in enumerate(self.basis(m, t)):
                    prod = p + q
                    table[(i, j)] = (self.coordinates(s, t, {prod: 1}) if len(prod) <= self.bound
                                     else np.array([Fraction(0)] * self.dim(s, t), dtype=object))
            self._mult_cache[key] = table
        return self._mult_cache[key]

    def multiply(self, s: int, m: int, t: int, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product of ``x`` in ``e_s A e_m`` and ``y`` in ``e_m A e_t``."""
        out = np.array([Fraction(0)] * self.dim(s, t), dtype=object)
        for (i, j), c in self.multiplication(s, m, t).items():
            if x[i] != 0 and y[j] != 0:
                out = out + x[i] * y[j] * c
        return out

    def right_multiplication_matrix(self, s: int, m: int, t: int, y: np.ndarray) -> np.ndarray:
        """Matrix of ``x -> x*y`` from ``e_s A e_m`` to ``e_s A e_t`` (columns indexed by basis of source)."""
        mat = np.array([[Fraction(0)] * self.dim(s, m) for _ in range(self.dim(s, t))], dtype=object).reshape(
            self.dim(s, t), self.dim(s, m))
        for (i, j), c in self.multiplication(s, m, t).items():
            if y[j] != 0:
                mat[:, i] = mat[:, i] + y[j] * c
        return mat

    def left_multiplication_matrix(self, s: int, m: int, t: int, x: np.ndarray) -> np.ndarray:
        """Matrix of ``y -> x*y`` from ``e_m A e_t`` to ``e_s A e_t``."""
        mat = np.array([[Fraction(0)] * self.dim(m, t) for _ in range(self.dim(s, t))], dtype=object).reshape(
            self.dim(s, t), self.dim(m, t))
        for (i, j), c in self.multiplication(s, m, t).items():
            if x[i] != 0:
                mat[:, j] = mat[:, j] + x[i] * c
        return mat

    def basis_left_matrices(self, s: int, m: int, t: int) -> List[np.ndarray]:
        """For each basis element ``x`` of ``e_s A e_m``, the matrix of ``y -> x*y`` on ``e_m A e_t``."""
        key = ("L", s, m, t)
        if key not in self._mult_cache:
            out = []
            for i in range(self.dim(s, m)):
                x = np.array([Fraction(int(k == i)) for k in range(self.dim(s, m))], dtype=object)
                out.append(self.left_multiplication_matrix(s, m, t, x))
            self._mult_cache[key] = out
        return self._mult_cache[key]

    def basis_right_matrices(self, s: int, m: int, t: int) -> List[np.ndarray]:
        """For each basis element ``y`` of ``e_m A e_t``, the matrix of ``x -> x*y`` on ``e_s A e_m``."""
        key = ("R", s, m, t)
        if key not in self._mult_cache:
            out = []
            for j in range(self.dim(m, t)):
                y = np.array([Fraction(int(k == j)) for k in range(self.dim(m, t))], dtype=object)
                out.append(self.right_multiplication_matrix(s, m, t, y))
            self._mult_cache[key] = out
        return self._mult_cache[key]

    def arrow_element(self, label: str) -> np.ndarray:
        a = self.quiver.arrow(label)
        return self.coordinates(a.source, a.target, {(label,): 1})

    def projective_dims(self, i: int) -> Tuple[int, ...]:
        return tuple(self.dim(i, v) for v in self.quiver.vertices)

    def injective_dims(self, i: int) -> Tuple[int, ...]:
        return tuple(self.dim(v, i) for v in self.quiver.vertices)

    def is_hereditary_path_algebra(self) -> bool:
        return self.quiver.is_acyclic() and not self.relations.relations


def build_algebra(quiver: Quiver, rels: Optional[RelationSet] = None) -> AlgebraBasis:
    return AlgebraBasis(quiver, rels if rels is not None else RelationSet())
