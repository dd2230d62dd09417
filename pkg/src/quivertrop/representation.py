"""Representations of bound quivers and the linear algebra of their morphisms."""

from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, InvalidRepresentation
from .fields import QQ, Field
from .quiver import AlgebraBasis, Path

Morphism = Dict[int, np.ndarray]


class Representation:
    """Vector spaces ``k^{dims[v]}`` and a ``dims[t] x dims[s]`` matrix per arrow ``s -> t``."""

    def __init__(self, algebra: AlgebraBasis, dims: Sequence[int], matrices: Mapping[str, object],
                 field: Field = QQ, check: bool = True):
        q = algebra.quiver
        if len(dims) != q.n:
            raise DimensionMismatch("dimension vector length differs from the vertex count")
        if any(d < 0 for d in dims):
            raise DimensionMismatch("dimensions must be nonnegative")
        self.algebra = algebra
        self.field = field
        self.dims = tuple(int(d) for d in dims)
        self.matrices: Dict[str, np.ndarray] = {}
        for a in q.arrows:
            shape = (self.dims[a.target - 1], self.dims[a.source - 1])
            m = matrices.get(a.label)
            if m is None:
                mat = field.zeros(*shape)
            else:
                mat = field.array(m) if not isinstance(m, np.ndarray) else field.from_rational_matrix(m)
                if mat.size == 0:
                    mat = field.zeros(*shape)
            if mat.shape != shape:
                raise DimensionMismatch(f"arrow {a.label}: expected shape {shape}, got {mat.shape}")
            self.matrices[a.label] = mat
        extra = set(matrices) - set(self.matrices)
        if extra:
            raise InvalidRepresentation(f"unknown arrows {sorted(extra)}")
        if check:
            self.check_relations()

    @property
    def quiver(self):
        return self.algebra.quiver

    def __repr__(self) -> str:
        return f"Representation(dims={self.dims}, field={self.field})"

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def path_matrix(self, path: Path, start: int) -> np.ndarray:
        """Matrix of ``M(path)``; ``path`` applied first arrow first."""
        s, t = self.quiver.path_endpoints(path, start)
        out = self.field.eye(self.dim(s))
        for lab in path:
            out = self.field.matmul(self.matrices[lab], out)
        return out

    def element_matrix(self, s: int, t: int, coords: np.ndarray) -> np.ndarray:
        """Action ``M(s) -> M(t)`` of an element of ``e_s A e_t`` given in basis coordinates."""
        out = self.field.zeros(self.dim(t), self.dim(s))
        for c, p in zip(coords, self.algebra.basis(s, t)):
            if c != 0:
                out = self.field.add(out, self.field.scale(c, self.path_matrix(p, s)))
        return out

    def check_relations(self) -> None:
        for rel in self.algebra.relations.relations:
            s, t = self.quiver.path_endpoints(rel.terms[0][1])
            total = self.field.zeros(self.dim(t), self.dim(s))
            for coef, p in rel.terms:
                total = self.field.add(total, self.field.scale(coef, self.path_matrix(p, s)))
            if not self.field.is_zero_matrix(total):
                raise InvalidRepresentation(f"relation {rel} does not vanish")

    def over(self, field: Field) -> "Representation":
        """Reduce a rational representation into ``field`` (identity if already there)."""
        if field == self.field:
            return self
        if self.field != QQ:
            raise FieldMismatch(f"cannot move a representation from {self.field} to {field}")
        mats = {k: field.from_rational_matrix(m) for k, m in self.matrices.items()}
        return Representation(self.algebra, self.dims, mats, field, check=False)

    def direct_sum(self, other: "Representation") -> "Representation":
        _same(self, other)
        mats = {}
        for a in self.quiver.arrows:
            m1, m2 = self.matrices[a.label], other.matrices[a.label]
            blk = self.field.zeros(m1.shape[0] + m2.shape[0], m1.shape[1] + m2.shape[1])
            blk[: m1.shape[0], : m1.shape[1]] = m1
            blk[m1.shape[0]:, m1.shape[1]:] = m2
            mats[a.label] = blk
        dims = [x + y for x, y in zip(self.dims, other.dims)]
        return Representation(self.algebra, dims, mats, self.field, check=False)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def identity(self) -> Morphism:
        return {v: self.field.eye(self.dim(v)) for v in self.quiver.vertices}

    # sub- and quotient representations

    def subrepresentation(self, bases: Mapping[int, np.ndarray]) -> "Representation":
        """Subrepresentation spanned by the columns of ``bases[v]`` (assumed invariant)."""
        F = self.field
        basis = {v: F.column_basis(bases[v]) if bases[v].shape[1] else F.zeros(self.dim(v), 0)
                 for v in self.quiver.vertices}
        mats = {}
        for a in self.quiver.arrows:
            src, tgt = basis[a.source], basis[a.target]
            img = F.matmul(self.matrices[a.label], src)
            x = F.solve(tgt, img) if tgt.shape[1] else (F.zeros(0, src.shape[1]) if F.is_zero_matrix(img) else None)
            if x is None:
                raise InvalidRepresentation(f"subspace is not invariant under {a.label}")
            mats[a.label] = x
        dims = [basis[v].shape[1] for v in self.quiver.vertices]
        return Representation(self.algebra, dims, mats, F, check=False)

    def quotient(self, bases: Mapping[int, np.ndarray]) -> "Representation":
        """Quotient by the invariant subspaces spanned by ``bases[v]``."""
        F = self.field
        proj = {v: _annihilator_rows(F, bases[v], self.dim(v)) for v in self.quiver.vertices}
        sections = {v: F.solve(proj[v], F.eye(proj[v].shape[0])) for v in self.quiver.vertices}
        mats = {}
        for a in self.quiver.arrows:
            mats[a.label] = F.matmul(F.matmul(proj[a.target], self.matrices[a.label]), sections[a.source])
        dims = [proj[v].shape[0] for v in self.quiver.vertices]
        return Representation(self.algebra, dims, mats, F, check=False)

    def radical_bases(self) -> Dict[int, np.ndarray]:
        """Subspaces ``rad M(v)`` spanned by images of arrows into ``v``."""
        F = self.field
        out = {}
        for v in self.quiver.vertices:
            cols = [self.matrices[a.label] for a in self.quiver.incoming(v)]
            cols = [c for c in cols if c.shape[1]]
            if cols:
                out[v] = F.column_basis(np.concatenate(cols, axis=1))
            else:
                out[v] = F.zeros(self.dim(v), 0)
        return out

    def top_dims(self) -> Tuple[int, ...]:
        rad = self.radical_bases()
        return tuple(self.dim(v) - rad[v].shape[1] for v in self.quiver.vertices)

    def socle_dims(self) -> Tuple[int, ...]:
        F = self.field
        out = []
        for v in self.quiver.vertices:
            rows = [self.matrices[a.label] for a in self.quiver.outgoing(v)]
            rows = [r for r in rows if r.shape[0]]
            if rows and self.dim(v):
                out.append(self.dim(v) - F.rank(np.concatenate(rows, axis=0)))
            else:
                out.append(self.dim(v))
        return tuple(out)

    def generated_by(self, vectors: Mapping[int, np.ndarray]) -> Dict[int, np.ndarray]:
        """Bases of the smallest subrepresentation containing the given columns."""
        F = self.field
        span = {v: vectors.get(v, F.zeros(self.dim(v), 0)) for v in self.quiver.vertices}
        span = {v: F.column_basis(m) if m.shape[1] else m for v, m in span.items()}
        changed = True
        while changed:
            changed = False
            for a in self.quiver.arrows:
                src = span[a.source]
                if not src.shape[1]:
                    continue
                img = F.matmul(self.matrices[a.label], src)
                old = span[a.target]
                new = F.column_basis(np.concatenate([old, img], axis=1))
                if new.shape[1] > old.shape[1]:
                    span[a.target] = new
                    changed = True
        return span


def _same(m: Representation, n: Representation) -> None:
    if m.field != n.field:
        raise FieldMismatch(f"{m.field} vs {n.field}")
    if m.algebra is not n.algebra and m.quiver != n.quiver:
        raise DimensionMismatch("representations of different quivers")


def _annihilator_rows(F: Field, basis: np.ndarray, n: int) -> np.ndarray:
    """Rows spanning the functionals vanishing on the given column space."""
    if basis.shape[1] == 0:
        return F.eye(n)
    return F.nullspace(basis.T).T


def hom_space(M: Representation, N: Representation) -> Tuple[int, List[Morphism]]:
    """Dimension and a basis of ``Hom(M, N)``, as per-vertex matrices ``N(v) x M(v)``."""
    _same(M, N)
    F = M.field
    q = M.quiver
    offsets = {}
    total = 0
    for v in q.vertices:
        offsets[v] = total
        total += N.dim(v) * M.dim(v)
    rows = []
    for a in q.arrows:
        s, t = a.source, a.target
        ns, ms, nt, mt = N.dim(s), M.dim(s), N.dim(t), M.dim(t)
        if nt * ms == 0:
            continue
        # N(a) phi_s - phi_t M(a) = 0, unknowns vectorised row-major.
        block = F.zeros(nt * ms, total)
        if ns * ms:
            block[:, offsets[s]:offsets[s] + ns * ms] = F.kron(N.matrices[a.label], F.eye(ms))
        if nt * mt:
            block[:, offsets[t]:offsets[t] + nt * mt] = F.sub(
                block[:, offsets[t]:offsets[t] + nt * mt], F.kron(F.eye(nt), M.matrices[a.label].T))
        rows.append(block)
    system = np.concatenate(rows, axis=0) if rows else F.zeros(0, total)
    null = F.nullspace(system) if total else F.zeros(0, 0)
    basis = []
    for k in range(null.shape[1]):
        vec = null[:, k]
        basis.append({v: vec[offsets[v]:offsets[v] + N.dim(v) * M.dim(v)].reshape(N.dim(v), M.dim(v))
                      for v in q.vertices})
    return len(basis), basis


def hom_dim(M: Representation, N: Representation) -> int:
    return hom_space(M, N)[0]


def image_bases(f: Morphism, N: Representation) -> Dict[int, np.ndarray]:
    F = N.field
    return {v: F.column_basis(f[v]) if f[v].size else F.zeros(N.dim(v), 0) for v in N.quiver.vertices}


def kernel_bases(f: Morphism, M: Representation) -> Dict[int, np.ndarray]:
    F = M.field
    out = {}
    for v in M.quiver.vertices:
        if f[v].shape[0] == 0:
            out[v] = F.eye(M.dim(v))
        elif M.dim(v) == 0:
            out[v] = F.zeros(0, 0)
        else:
            out[v] = F.nullspace(f[v])
    return out


def sum_of_images(maps: Sequence[Morphism], N: Representation) -> Dict[int, np.ndarray]:
    F = N.field
    out = {}
    for v in N.quiver.vertices:
        cols = [f[v] for f in maps if f[v].shape[1]]
        out[v] = F.column_basis(np.concatenate(cols, axis=1)) if cols else F.zeros(N.dim(v), 0)
    return out


def intersection_of_kernels(maps: Sequence[Morphism], M: Representation) -> Dict[int, np.ndarray]:
    F = M.field
    out = {}
    for v in M.quiver.vertices:
        rows = [f[v] for f in maps if f[v].shape[0]]
        if not rows:
            out[v] = F.eye(M.dim(v))
        elif M.dim(v) == 0:
            out[v] = F.zeros(0, 0)
        else:
            out[v] = F.nullspace(np.concatenate(rows, axis=0))
    return out


def projective(algebra: AlgebraBasis, i: int, field: Field = QQ) -> Representation:
    """``P_i``: basis of ``P_i(v)`` is ``algebra.basis(i, v)``; arrows act by right multiplication."""
    mats = {}
    for a in algebra.quiver.arrows:
        m = algebra.right_multiplication_matrix(i, a.source, a.target, algebra.arrow_element(a.label))
        mats[a.label] = field.from_rational_matrix(m)
    return Representation(algebra, algebra.projective_dims(i), mats, field, check=False)


def injective(algebra: AlgebraBasis, i: int, field: Field = QQ) -> Representation:
    """``I_i = D(A e_i)``: ``I_i(v)`` is dual to ``algebra.basis(v, i)``."""
    mats = {}
    for a in algebra.quiver.arrows:
        # (paths t->i) -> (paths s->i), q -> a q ; its transpose maps I_i(s) -> I_i(t)
        m = algebra.left_multiplication_matrix(a.source, a.target, i, algebra.arrow_element(a.label))
        mats[a.label] = field.from_rational_matrix(m.T)
    return Representation(algebra, algebra.injective_dims(i), mats, field, check=False)


def simple(algebra: AlgebraBasis, i: int, field: Field = QQ) -> Representation:
    dims = [1 if v == i else 0 for v in algebra.quiver.vertices]
    return Representation(algebra, dims, {}, field, check=False)


def zero_representation(algebra: AlgebraBasis, field: Field = QQ) -> Representation:
    return Representation(algebra, [0] * algebra.quiver.n, {}, field, check=False)


def direct_sum(reps: Sequence[Representation]) -> Representation:
    out = reps[0]
    for r in reps[1:]:
        out = out.direct_sum(r)
    return out


def random_representation(algebra: AlgebraBasis, dims: Sequence[int], rng: np.random.Generator,
                          field: Field = QQ, coeff_bound: int = 100) -> Representation:
    """Uniform random integer matrices; only valid for algebras without relations."""
    if algebra.relations.relations:
        raise InvalidRepresentation("random representations need an algebra without relations")
    mats = {}
    for a in algebra.quiver.arrows:
        mats[a.label] = field.random_matrix(rng, dims[a.target - 1], dims[a.source - 1], coeff_bound)
    return Representation(algebra, dims, mats, field, check=False)


def regular_representation(algebra: AlgebraBasis, field: Field = QQ) -> Representation:
    """``A = P_1 + ... + P_n`` as a right module."""
    return direct_sum([projective(algebra, i, field) for i in algebra.quiver.vertices])


def compose(f: Morphism, g: Morphism, field: Field) -> Morphism:
    """``f o g``."""
    return {v: field.matmul(f[v], g[v]) for v in f}


def is_morphism(f: Morphism, M: Representation, N: Representation) -> bool:
    F = M.field
    for a in M.quiver.arrows:
        lhs = F.matmul(N.matrices[a.label], f[a.source])
        rhs = F.matmul(f[a.target], M.matrices[a.label])
        if not F.is_zero_matrix(F.sub(lhs, rhs)):
            return False
    return True


def endomorphism_dim(M: Representation) -> int:
    return hom_space(M, M)[0]


def vertex_vectors(M: Representation, v: int, vectors: np.ndarray) -> Dict[int, np.ndarray]:
    F = M.field
    return {w: (vectors if w == v else F.zeros(M.dim(w), 0)) for w in M.quiver.vertices}
