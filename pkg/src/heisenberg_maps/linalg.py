"""Exact dense linear algebra over the rationals.

Entries are :class:`fractions.Fraction`, which already keeps every value in
lowest terms with a positive denominator. Matrices are immutable; every
operation returns a new one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotSquare, ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"(0|-?[1-9][0-9]*)(?:/([1-9][0-9]*))?")


def to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    """``p`` when the denominator is 1, else ``p/q``."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; rejects anything it would not emit."""
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    q = Fraction(num, den)
    if den == 1 or q.denominator != den:
        raise ParseError(f"rational not in lowest terms: {text!r}")
    return q


@dataclass(frozen=True)
class Matrix:
    """Dense ``nrows x ncols`` matrix of Fractions stored row-major."""

    nrows: int
    ncols: int
    entries: tuple

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        ent = tuple(to_rational(v) for v in self.entries)
        if len(ent) != self.nrows * self.ncols:
            raise DimensionMismatch(
                f"{len(ent)} entries for a {self.nrows}x{self.ncols} matrix"
            )
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> Matrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), ncols, tuple(v for r in rows for v in r))

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> Matrix:
        if ncols is None:
            ncols = nrows
        return cls(nrows, ncols, (Fraction(0),) * (nrows * ncols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> Matrix:
        """The matrix unit with a 1 at 0-based position ``(i, j)``."""
        ent = [Fraction(0)] * (n * n)
        ent[i * n + j] = Fraction(1)
        return cls(n, n, tuple(ent))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> Matrix:
        columns = [list(c) for c in columns]
        nrows = len(columns[0]) if columns else 0
        if any(len(c) != nrows for c in columns):
            raise DimensionMismatch("ragged columns")
        return cls(nrows, len(columns), tuple(c[i] for i in range(nrows) for c in columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"({i}, {j}) outside {self.nrows}x{self.ncols}")
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.ncols] if self.ncols else ()

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.nrows)]

    def transpose(self) -> Matrix:
        return Matrix(self.ncols, self.nrows, self.vec())

    def vec(self) -> tuple:
        """Column-major flattening."""
        return tuple(v for j in range(self.ncols) for v in self.column(j))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.nrows, self.ncols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __neg__(self) -> Matrix:
        return Matrix(self.nrows, self.ncols, tuple(-a for a in self.entries))

    def scale(self, c) -> Matrix:
        c = to_rational(c)
        return Matrix(self.nrows, self.ncols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    def __str__(self) -> str:
        return "\n".join(" ".join(format_rational(v) for v in self.row(i)) for i in range(self.nrows))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    bcols = [b.column(j) for j in range(b.ncols)]
    out = []
    for i in range(a.nrows):
        r = a.row(i)
        for c in bcols:
            out.append(sum((x * y for x, y in zip(r, c) if x and y), Fraction(0)))
    return Matrix(a.nrows, b.ncols, tuple(out))


def mat_vec(a: Matrix, v: Sequence) -> tuple:
    if a.ncols != len(v):
        raise DimensionMismatch(f"cannot apply {a.shape} to a vector of length {len(v)}")
    return tuple(
        sum((x * y for x, y in zip(a.row(i), v) if x and y), Fraction(0)) for i in range(a.nrows)
    )


def anti_transpose(a: Matrix) -> Matrix:
    """Reflect across the anti-diagonal: result[i, j] = a[n-1-j, n-1-i] (0-based)."""
    if not a.is_square:
        raise NotSquare(f"anti-transpose needs a square matrix, got {a.shape}")
    n = a.nrows
    return Matrix(n, n, tuple(a[n - 1 - j, n - 1 - i] for i in range(n) for j in range(n)))


def rref(a: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row echelon form, 0-based pivot columns, rank.

    Pivots are the first nonzero entry found scanning down each column.
    """
    m = [list(a.row(i)) for i in range(a.nrows)]
    pivots: list[int] = []
    r = 0
    for c in range(a.ncols):
        if r == a.nrows:
            break
        p = next((i for i in range(r, a.nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [v / piv for v in m[r]]
        prow = m[r]
        for i in range(a.nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], prow)]
        pivots.append(c)
        r += 1
    return Matrix(a.nrows, a.ncols, tuple(v for row in m for v in row)), pivots, r


def rank(a: Matrix) -> int:
    return rref(a)[2]


def kernel_basis(a: Matrix) -> list[tuple]:
    """Canonical nullspace basis, one vector per free column in increasing order.

    Each vector has a 1 at its free column, zero at every other free column,
    and the pivot coordinates forced by the reduced system.
    """
    r, pivots, rk = rref(a)
    pivot_set = set(pivots)
    basis = []
    for f in range(a.ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * a.ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        basis.append(tuple(v))
    return basis


def linear_combination(vectors: Iterable[Sequence], coeffs: Iterable) -> tuple:
    out = None
    for v, c in zip(vectors, coeffs):
        c = to_rational(c)
        if out is None:
            out = [Fraction(0)] * len(v)
        for i, x in enumerate(v):
            if x:
                out[i] += c * x
    return tuple(out or ())
