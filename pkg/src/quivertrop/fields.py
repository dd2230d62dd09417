"""Exact linear algebra over the rationals and over prime fields.

Matrices are numpy arrays: ``dtype=object`` holding ``int``/``Fraction``
entries for the rationals and ``int64`` residues for a prime field.  All
routines return new arrays and never mutate their inputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import FieldMismatch


def parse_rational(token) -> Fraction:
    if isinstance(token, Fraction):
        return token
    if isinstance(token, (int, np.integer)):
        return Fraction(int(token))
    return Fraction(str(token).strip())


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Field:
    """Common interface. Subclasses fix the element type and the arithmetic."""

    characteristic = 0
    dtype: type = object

    @property
    def tag(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.tag

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.tag == other.tag

    def __hash__(self) -> int:
        return hash(self.tag)

    # element level

    def convert(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == 0

    # array level

    def normalize(self, a: np.ndarray) -> np.ndarray:
        return a

    def array(self, rows, shape: Optional[tuple] = None) -> np.ndarray:
        a = np.array(rows, dtype=object)
        if shape is not None:
            a = a.reshape(shape)
        out = np.empty(a.shape, dtype=self.dtype)
        for idx, x in np.ndenumerate(a):
            out[idx] = self.convert(x)
        return out

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return self.array(np.zeros((rows, cols), dtype=object))

    def eye(self, n: int) -> np.ndarray:
        a = self.zeros(n, n)
        for i in range(n):
            a[i, i] = self.convert(1)
        return a

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
            return self.zeros(a.shape[0], b.shape[1])
        return self.normalize(a @ b)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.normalize(a + b)

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.normalize(a - b)

    def scale(self, c, a: np.ndarray) -> np.ndarray:
        return self.normalize(self.convert(c) * a)

    def is_zero_matrix(self, a: np.ndarray) -> bool:
        return all(self.is_zero(x) for x in a.flat)

    def kron(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        ra, ca = a.shape
        rb, cb = b.shape
        out = self.zeros(ra * rb, ca * cb)
        for i in range(ra):
            for j in range(ca):
                if not self.is_zero(a[i, j]):
                    out[i * rb:(i + 1) * rb, j * cb:(j + 1) * cb] = self.normalize(a[i, j] * b)
        return out

    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        m = a.copy()
        rows, cols = m.shape
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = [i for i in range(r, rows) if not self.is_zero(m[i, c])]
            if not nz:
                continue
            i = nz[0]
            if i != r:
                m[[r, i]] = m[[i, r]]
            m[r] = self.normalize(m[r] * self.inv(m[r, c]))
            col = m[:, c].copy()
            col[r] = self.convert(0)
            others = [i for i in range(rows) if not self.is_zero(col[i])]
            if others:
                m[others] = self.normalize(m[others] - np.outer(col[others], m[r]))
            pivots.append(c)
            r += 1
        return m, pivots

    def rank(self, a: np.ndarray) -> int:
        if a.size == 0:
            return 0
        return len(self.rref(a)[1])

    def nullspace(self, a: np.ndarray) -> np.ndarray:
        """Basis of {x : a x = 0} as the columns of the returned matrix."""
        rows, cols = a.shape
        if rows == 0:
            return self.eye(cols)
        r, pivots = self.rref(a)
        free = [c for c in range(cols) if c not in set(pivots)]
        basis = self.zeros(cols, len(free))
        for k, f in enumerate(free):
            basis[f, k] = self.convert(1)
            for i, p in enumerate(pivots):
                basis[p, k] = self.normalize(np.array([-r[i, f]], dtype=self.dtype))[0]
        return basis

    def row_basis(self, a: np.ndarray) -> np.ndarray:
        """Reduced echelon basis of the row space."""
        if a.shape[0] == 0:
            return a.copy()
        r, pivots = self.rref(a)
        return r[: len(pivots)].copy()

    def column_basis(self, a: np.ndarray) -> np.ndarray:
        """Columns of ``a`` forming a basis of its column space."""
        if a.shape[1] == 0 or a.shape[0] == 0:
            return self.zeros(a.shape[0], 0)
        _, pivots = self.rref(a)
        return a[:, pivots].copy()

    def solve(self, a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
        """Some X with a X = b, or None when the system is inconsistent."""
        rows, cols = a.shape
        k = b.shape[1]
        if rows == 0:
            return self.zeros(cols, k)
        aug = np.concatenate([a, b], axis=1)
        r, pivots = self.rref(aug)
        if any(p >= cols for p in pivots):
            return None
        x = self.zeros(cols, k)
        for i, p in enumerate(pivots):
            x[p] = r[i, cols:]
        return x

    def inverse(self, a: np.ndarray) -> np.ndarray:
        n = a.shape[0]
        x = self.solve(a, self.eye(n))
        if x is None or self.rank(a) != n:
            raise ValueError("matrix is singular")
        return x

    def random_matrix(self, rng: np.random.Generator, rows: int, cols: int, bound: int) -> np.ndarray:
        vals = rng.integers(-bound, bound + 1, size=(rows, cols))
        return self.array(vals.astype(object).tolist() if rows and cols else np.zeros((rows, cols)),
                          shape=(rows, cols))

    def from_rational_matrix(self, a: np.ndarray) -> np.ndarray:
        """Image of a matrix of rationals under the canonical map into this field."""
        out = np.empty(a.shape, dtype=self.dtype)
        for idx, x in np.ndenumerate(a):
            out[idx] = self.convert(x)
        return out

    def to_rational(self, x) -> Fraction:
        raise NotImplementedError


class RationalField(Field):
    characteristic = 0
    dtype = object

    @property
    def tag(self) -> str:
        return "Q"

    def convert(self, x):
        f = parse_rational(x)
        return f.numerator if f.denominator == 1 else f

    def inv(self, x):
        return Fraction(1) / x if not isinstance(x, Fraction) else 1 / x

    def to_rational(self, x) -> Fraction:
        return Fraction(x)

    def normalize(self, a: np.ndarray) -> np.ndarray:
        out = np.empty(a.shape, dtype=object)
        for idx, x in np.ndenumerate(a):
            if isinstance(x, Fraction) and x.denominator == 1:
                x = x.numerator
            out[idx] = x
        return out


class PrimeField(Field):
    dtype = np.int64

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        if p >= 1 << 31:
            raise ValueError("prime too large for int64 arithmetic")
        self.p = p
        self.characteristic = p

    @property
    def tag(self) -> str:
        return f"GF({self.p})"

    def convert(self, x):
        f = parse_rational(x)
        if f.denominator % self.p == 0:
            raise FieldMismatch(f"{f} has no image in {self.tag}")
        return np.int64(f.numerator * pow(f.denominator, -1, self.p) % self.p)

    def inv(self, x):
        return np.int64(pow(int(x), self.p - 2, self.p))

    def to_rational(self, x) -> Fraction:
        x = int(x) % self.p
        return Fraction(x - self.p if x > self.p // 2 else x)

    def normalize(self, a: np.ndarray) -> np.ndarray:
        return np.mod(np.asarray(a, dtype=np.int64), self.p)

    def array(self, rows, shape: Optional[tuple] = None) -> np.ndarray:
        a = np.array(rows, dtype=object)
        if shape is not None:
            a = a.reshape(shape)
        if a.size and all(isinstance(x, (int, np.integer)) for x in a.flat):
            return (_int_array(a) % self.p).astype(np.int64)
        return super().array(a)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        m = np.array(a, dtype=np.int64) % self.p
        rows, cols = m.shape
        p = self.p
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(m[r:, c])[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                m[[r, i]] = m[[i, r]]
            m[r] = (m[r] * pow(int(m[r, c]), p - 2, p)) % p
            col = m[:, c].copy()
            col[r] = 0
            mask = col != 0
            if mask.any():
                m[mask] = (m[mask] - np.outer(col[mask], m[r]) % p) % p
            pivots.append(c)
            r += 1
        return m, pivots

    def kron(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.kron(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % self.p

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape[1] == 0:
            return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        if a.shape[1] * (self.p - 1) ** 2 < (1 << 62):
            return (a @ b) % self.p
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for k in range(a.shape[1]):
            out = (out + np.outer(a[:, k], b[k]) % self.p) % self.p
        return out

    def random_matrix(self, rng: np.random.Generator, rows: int, cols: int, bound: int) -> np.ndarray:
        return rng.integers(-bound, bound + 1, size=(rows, cols)).astype(np.int64) % self.p


def _int_array(a: np.ndarray) -> np.ndarray:
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = int(x)
    return out


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag: str) -> Field:
    tag = tag.strip()
    if tag in ("Q", "QQ"):
        return QQ
    if tag.startswith("GF(") and tag.endswith(")"):
        return GF(int(tag[3:-1]))
    if tag.isdigit():
        return GF(int(tag))
    raise ValueError(f"unknown field tag {tag!r}")


def block_matrix(field: Field, blocks: Sequence[Sequence[np.ndarray]],
                 row_sizes: Sequence[int], col_sizes: Sequence[int]) -> np.ndarray:
    """Assemble a matrix from a grid of blocks; ``None`` means a zero block."""
    out = field.zeros(sum(row_sizes), sum(col_sizes))
    r0 = 0
    for i, rs in enumerate(row_sizes):
        c0 = 0
        for j, cs in enumerate(col_sizes):
            blk = blocks[i][j]
            if blk is not None and rs and cs:
                out[r0:r0 + rs, c0:c0 + cs] = blk
            c0 += cs
        r0 += rs
    return out


def integer_rank(rows: Iterable[Sequence[int]]) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    return QQ.rank(QQ.array(rows))
