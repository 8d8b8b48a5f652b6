"""Exact dense linear algebra over the rationals.

Maps act on column vectors: a map ``f: Q^p -> Q^q`` is a ``q x p`` matrix and
the composite ``g o f`` is the matrix product ``g @ f``.  Subspaces are kept
in canonical form (reduced row echelon basis, no zero rows), so equality of
subspaces is plain structural equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    InconsistentSystem,
    NotADirectSum,
    NotCanonical,
    RationalFormatError,
    SingularMatrix,
)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would silently smuggle rounding into exact
    computations.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RationalFormatError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise RationalFormatError(f"not a rational: {value!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise RationalFormatError(f"zero denominator: {value!r}")
        return Fraction(num, den)
    raise RationalFormatError(f"not a rational: {value!r}")


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Matrix:
    """Immutable dense matrix of Fractions.

    Also serves as the representation of a linear map: ``codomain_dim`` rows
    and ``domain_dim`` columns.  Zero-sized shapes are allowed (and needed:
    the basis of the zero subspace of ``Q^n`` is a ``0 x n`` matrix).
    """

    __slots__ = ("_rows", "_shape", "_hash")

    def __init__(self, rows: Iterable[Iterable] = (), shape: tuple[int, int] | None = None):
        data = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        if shape is None:
            if not data:
                raise ValueError("empty matrix needs an explicit shape")
            shape = (len(data), len(data[0]))
        r, c = shape
        if len(data) != r or any(len(row) != c for row in data):
            raise DimensionMismatch(f"ragged or mis-shaped rows for shape {shape}")
        self._rows = data
        self._shape = (r, c)
        self._hash = None

    @classmethod
    def _raw(cls, data: tuple, shape: tuple[int, int]) -> "Matrix":
        # trusted constructor: rows already tuples of Fractions
        m = cls.__new__(cls)
        m._rows = data
        m._shape = shape
        m._hash = None
        return m

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        z = Fraction(0)
        return cls._raw(tuple((z,) * c for _ in range(r)), (r, c))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, z = Fraction(1), Fraction(0)
        return cls._raw(tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)), (n, n))

    @classmethod
    def diag(cls, *values) -> "Matrix":
        n = len(values)
        vals = [to_fraction(v) for v in values]
        z = Fraction(0)
        return cls._raw(tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)), (n, n))

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        return cls([[v] for v in values], shape=(len(values), 1))

    @classmethod
    def row(cls, values: Sequence) -> "Matrix":
        return cls([list(values)], shape=(1, len(values)))

    @classmethod
    def unit(cls, n: int, k: int) -> "Matrix":
        """Standard basis column vector e_k of Q^n (0-based k)."""
        return cls.column([1 if i == k else 0 for i in range(n)])

    # -- basic accessors -----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self._shape

    @property
    def nrows(self) -> int:
        return self._shape[0]

    @property
    def ncols(self) -> int:
        return self._shape[1]

    @property
    def domain_dim(self) -> int:
        return self._shape[1]

    @property
    def codomain_dim(self) -> int:
        return self._shape[0]

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row_at(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def col_at(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._shape == other._shape and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._shape, self._rows))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_fraction(x) for x in row) + "]" for row in self._rows)
        if not self._rows:
            return f"Matrix([], shape={self._shape})"
        return f"Matrix([{body}])"

    def to_lists(self) -> list[list[str]]:
        return [[format_fraction(x) for x in row] for row in self._rows]

    def pretty(self, indent: str = "") -> str:
        if self.nrows == 0 or self.ncols == 0:
            return f"{indent}(empty {self.nrows}x{self.ncols})"
        cells = self.to_lists()
        width = max(len(c) for row in cells for c in row)
        return "\n".join(indent + "[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)

    # -- arithmetic ----------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot compose {self.shape} after {other.shape}")
        cols = list(zip(*other._rows)) if other.nrows else [()] * other.ncols
        z = Fraction(0)
        data = tuple(
            tuple(sum((a * b for a, b in zip(row, col) if a and b), z) for col in cols)
            for row in self._rows
        )
        return Matrix._raw(data, (self.nrows, other.ncols))

    def _check_same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self._rows, other._rows)),
            self.shape,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self._rows, other._rows)),
            self.shape,
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in row) for row in self._rows), self.shape)

    def scale(self, c) -> "Matrix":
        c = to_fraction(c)
        return Matrix._raw(tuple(tuple(c * a for a in row) for row in self._rows), self.shape)

    @property
    def T(self) -> "Matrix":
        r, c = self.shape
        if r == 0:
            return Matrix.zeros(c, 0)
        return Matrix._raw(tuple(zip(*self._rows)), (c, r))

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; basis order b_i (x) b'_j at index i*dim' + j."""
        r1, c1 = self.shape
        r2, c2 = other.shape
        data = tuple(
            tuple(self._rows[i1][j1] * other._rows[i2][j2] for j1 in range(c1) for j2 in range(c2))
            for i1 in range(r1)
            for i2 in range(r2)
        )
        return Matrix._raw(data, (r1 * r2, c1 * c2))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise DimensionMismatch(f"hstack of {self.shape} and {other.shape}")
        return Matrix._raw(tuple(a + b for a, b in zip(self._rows, other._rows)), (self.nrows, self.ncols + other.ncols))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise DimensionMismatch(f"vstack of {self.shape} and {other.shape}")
        return Matrix._raw(self._rows + other._rows, (self.nrows + other.nrows, self.ncols))

    def columns(self, indices: Sequence[int]) -> "Matrix":
        return Matrix._raw(tuple(tuple(row[j] for j in indices) for row in self._rows), (self.nrows, len(indices)))

    def is_zero(self) -> bool:
        return all(not x for row in self._rows for x in row)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_identity(self) -> bool:
        return self.is_square() and self == Matrix.identity(self.nrows)

    def is_idempotent(self) -> bool:
        return self.is_square() and self @ self == self

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        m = [list(row) for row in self._rows]
        nr, nc = self.shape
        pivots = []
        r = 0
        for c in range(nc):
            if r == nr:
                break
            p = next((i for i in range(r, nr) if m[i][c]), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            lead = m[r][c]
            if lead != 1:
                m[r] = [x / lead for x in m[r]]
            for i in range(nr):
                if i != r and m[i][c]:
                    factor = m[i][c]
                    m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Matrix._raw(tuple(tuple(row) for row in m), self.shape), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch(f"inverse of non-square {self.shape}")
        n = self.nrows
        red, piv = self.hstack(Matrix.identity(n)).rref()
        if tuple(p for p in piv if p < n) != tuple(range(n)):
            raise SingularMatrix("matrix is singular")
        return red.columns(range(n, 2 * n))

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows


def identity(n: int) -> Matrix:
    return Matrix.identity(n)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """The composite ``a o b`` (apply ``b`` first)."""
    return a @ b


def compose(*maps: Matrix) -> Matrix:
    """``compose(f, g, h) = f o g o h``."""
    if not maps:
        raise ValueError("compose needs at least one map")
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = m @ out
    return out


def kron(a: Matrix, b: Matrix) -> Matrix:
    return a.kron(b)


def rank(f: Matrix) -> int:
    return f.rank()


def first_difference(a: Matrix, b: Matrix) -> int | None:
    """Index of the first column where ``a`` and ``b`` differ, else None."""
    if a.shape != b.shape:
        raise DimensionMismatch(f"shape {a.shape} vs {b.shape}")
    for j in range(a.ncols):
        if a.col_at(j) != b.col_at(j):
            return j
    return None


def witness_vector(a: Matrix, b: Matrix) -> Matrix | None:
    """A standard basis vector ``e_j`` with ``a e_j != b e_j``, or None."""
    j = first_difference(a, b)
    return None if j is None else Matrix.unit(a.ncols, j)


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Some ``x`` with ``a @ x == b``; free variables are set to zero.

    Raises InconsistentSystem when no solution exists.
    """
    if a.nrows != b.nrows:
        raise DimensionMismatch(f"solve with {a.shape} and {b.shape}")
    n = a.ncols
    red, piv = a.hstack(b).rref()
    if any(p >= n for p in piv):
        raise InconsistentSystem("right-hand side not in the column space")
    x = [[Fraction(0)] * b.ncols for _ in range(n)]
    for r, p in enumerate(piv):
        x[p] = list(red.row_at(r)[n:])
    return Matrix._raw(tuple(tuple(row) for row in x), (n, b.ncols))


# -- subspaces ----------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^ambient_dim`` with a canonical RREF basis (as rows)."""

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        if self.basis.ncols != self.ambient_dim:
            raise DimensionMismatch(f"basis rows have length {self.basis.ncols}, ambient {self.ambient_dim}")
        red, piv = self.basis.rref()
        if red != self.basis or len(piv) != self.basis.nrows:
            raise NotCanonical("basis is not in reduced row echelon form with full row rank")

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = [list(v) for v in vectors]
        if not rows:
            return cls.zero(ambient_dim)
        red, piv = Matrix(rows, shape=(len(rows), ambient_dim)).rref()
        return cls(ambient_dim, Matrix._raw(red.rows[: len(piv)], (len(piv), ambient_dim)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis.rows)

    def as_columns(self) -> Matrix:
        """Basis vectors as the columns of an ``ambient x dim`` matrix."""
        return self.basis.T

    def contains(self, v: Sequence) -> bool:
        return Subspace.span(list(self.basis.rows) + [list(v)], self.ambient_dim).dim == self.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces of different ambient spaces")
        return Subspace.span(list(self.basis.rows) + list(other.basis.rows), self.ambient_dim)

    def __str__(self) -> str:
        if self.dim == 0:
            return f"0 < Q^{self.ambient_dim}"
        vecs = ", ".join("(" + ", ".join(format_fraction(x) for x in row) + ")" for row in self.basis.rows)
        return f"span{{{vecs}}} < Q^{self.ambient_dim}"


def kernel(f: Matrix) -> Subspace:
    red, piv = f.rref()
    n = f.ncols
    vectors = []
    for j in (j for j in range(n) if j not in piv):
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for r, p in enumerate(piv):
            v[p] = -red[r, j]
        vectors.append(v)
    return Subspace.span(vectors, n)


def image(f: Matrix) -> Subspace:
    return Subspace.span(f.T.rows, f.nrows)


def complement(s: Subspace) -> Subspace:
    """Coordinate complement: standard basis vectors at the non-pivot columns."""
    piv = set(s.pivots)
    n = s.ambient_dim
    return Subspace.span(
        [[1 if i == j else 0 for i in range(n)] for j in range(n) if j not in piv], n
    )


def is_direct_sum(s: Subspace, t: Subspace) -> bool:
    """True iff ``s (+) t`` is the whole ambient space."""
    if s.ambient_dim != t.ambient_dim:
        return False
    return s.dim + t.dim == s.ambient_dim and (s + t).dim == s.ambient_dim


def projector_onto(s: Subspace, along: Subspace) -> Matrix:
    """The idempotent with image ``s`` and kernel ``along``."""
    if not is_direct_sum(s, along):
        raise NotADirectSum(f"{s} and {along} do not decompose the ambient space")
    n = s.ambient_dim
    if n == 0:
        return Matrix.zeros(0, 0)
    b = s.as_columns().hstack(along.as_columns())
    keep = Matrix.diag(*([1] * s.dim + [0] * along.dim))
    return b @ keep @ b.inverse()
