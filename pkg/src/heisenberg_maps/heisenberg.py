"""The n x n Heisenberg algebra in compact coordinates.

An element is stored as its first row ``x[1,2..n]`` followed by its last
column ``x[2..n-1,n]``, which gives ``2n - 3`` coordinates. Coordinate ``k``
(1-based) is ``e[1,k+1]`` for ``k <= n-1`` and ``e[k-n+2,n]`` otherwise, so the
center ``e[1,n]`` sits at coordinate ``n - 1``.

Products of two elements always land in the center, so :func:`h_mul` returns
a :class:`CenterElement` rather than a full element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IndexOutOfRange, NotInCn, NotSquare, SizeMismatch
from .linalg import Matrix, anti_transpose, to_rational

_ZERO = Fraction(0)


def check_n(n: int) -> int:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"n must be an integer >= 3, got {n!r}")
    return n


def dim(n: int) -> int:
    """Dimension ``2n - 3`` of the algebra."""
    return 2 * n - 3


def center_index(n: int) -> int:
    """0-based coordinate of ``e[1,n]``."""
    return n - 2


@dataclass(frozen=True)
class HeisenbergElement:
    n: int
    row: tuple  # x[1,2], ..., x[1,n]
    col: tuple  # x[2,n], ..., x[n-1,n]

    def __post_init__(self):
        check_n(self.n)
        row = tuple(to_rational(v) for v in self.row)
        col = tuple(to_rational(v) for v in self.col)
        if len(row) != self.n - 1 or len(col) != self.n - 2:
            raise SizeMismatch(
                f"n={self.n} needs {self.n - 1} row and {self.n - 2} column entries,"
                f" got {len(row)} and {len(col)}"
            )
        object.__setattr__(self, "row", row)
        object.__setattr__(self, "col", col)

    @classmethod
    def zero(cls, n: int) -> HeisenbergElement:
        return cls(n, (_ZERO,) * (n - 1), (_ZERO,) * (n - 2))

    @classmethod
    def from_coords(cls, n: int, coords: Sequence) -> HeisenbergElement:
        if len(coords) != dim(n):
            raise SizeMismatch(f"n={n} needs {dim(n)} coordinates, got {len(coords)}")
        return cls(n, tuple(coords[: n - 1]), tuple(coords[n - 1:]))

    @classmethod
    def from_dense(cls, m: Matrix) -> HeisenbergElement:
        """Inverse of :meth:`dense`; raises if ``m`` has entries outside the pattern."""
        if not m.is_square:
            raise NotSquare(f"expected a square matrix, got {m.shape}")
        n = m.nrows
        x = cls(n, m.row(0)[1:], m.column(n - 1)[1:n - 1])
        if x.dense() != m:
            raise ValueError("matrix is not in the Heisenberg algebra")
        return x

    @property
    def coords(self) -> tuple:
        return self.row + self.col

    def entry(self, i: int, j: int) -> Fraction:
        """Matrix entry ``x[i,j]`` with 1-based indices."""
        n = self.n
        if i == 1 and 2 <= j <= n:
            return self.row[j - 2]
        if j == n and 2 <= i <= n - 1:
            return self.col[i - 2]
        if 1 <= i <= n and 1 <= j <= n:
            return _ZERO
        raise IndexOutOfRange(f"({i}, {j}) outside {n}x{n}")

    def dense(self) -> Matrix:
        n = self.n
        ent = [_ZERO] * (n * n)
        for j in range(2, n + 1):
            ent[j - 1] = self.row[j - 2]
        for i in range(2, n):
            ent[(i - 1) * n + n - 1] = self.col[i - 2]
        return Matrix(n, n, tuple(ent))

    def _check_same(self, other: HeisenbergElement):
        if self.n != other.n:
            raise SizeMismatch(f"n={self.n} vs n={other.n}")

    def __add__(self, other: HeisenbergElement) -> HeisenbergElement:
        self._check_same(other)
        return HeisenbergElement(
            self.n,
            tuple(a + b for a, b in zip(self.row, other.row)),
            tuple(a + b for a, b in zip(self.col, other.col)),
        )

    def __neg__(self) -> HeisenbergElement:
        return HeisenbergElement(self.n, tuple(-a for a in self.row), tuple(-a for a in self.col))

    def __sub__(self, other: HeisenbergElement) -> HeisenbergElement:
        return self + (-other)

    def scale(self, c) -> HeisenbergElement:
        c = to_rational(c)
        return HeisenbergElement(self.n, tuple(c * a for a in self.row), tuple(c * a for a in self.col))

    def __rmul__(self, c) -> HeisenbergElement:
        return self.scale(c)


@dataclass(frozen=True)
class CenterElement:
    """The central element ``a * e[1,n]``."""

    n: int
    a: Fraction

    def __post_init__(self):
        check_n(self.n)
        object.__setattr__(self, "a", to_rational(self.a))

    def to_element(self) -> HeisenbergElement:
        row = [_ZERO] * (self.n - 1)
        row[-1] = self.a
        return HeisenbergElement(self.n, tuple(row), (_ZERO,) * (self.n - 2))

    def dense(self) -> Matrix:
        return self.to_element().dense()


def basis_element(n: int, k: int) -> HeisenbergElement:
    """``E_k`` for 1-based ``k`` in ``[1, 2n-3]``."""
    check_n(n)
    if not 1 <= k <= dim(n):
        raise IndexOutOfRange(f"basis index {k} outside [1, {dim(n)}] for n={n}")
    coords = [_ZERO] * dim(n)
    coords[k - 1] = Fraction(1)
    return HeisenbergElement.from_coords(n, coords)


def h_mul(x: HeisenbergElement, y: HeisenbergElement) -> CenterElement:
    """``XY``, which is ``(sum_j x[1,j] y[j,n]) e[1,n]``."""
    x._check_same(y)
    # zip stops at x[1,n-1], pairing x[1,j] with y[j,n]
    return CenterElement(x.n, sum((a * b for a, b in zip(x.row, y.col) if a and b), _ZERO))


def commutator(x: HeisenbergElement, y: HeisenbergElement) -> CenterElement:
    return CenterElement(x.n, h_mul(x, y).a - h_mul(y, x).a)


def bracket_coefficient(x: Sequence, y: Sequence, n: int) -> Fraction:
    """e[1,n]-coefficient of ``[x, y]`` for raw coordinate sequences."""
    m = n - 2
    s = _ZERO
    for p in range(m):
        a, b = x[p], y[n - 1 + p]
        if a and b:
            s += a * b
        a, b = y[p], x[n - 1 + p]
        if a and b:
            s -= a * b
    return s


def tau(x: HeisenbergElement) -> HeisenbergElement:
    """Anti-transpose restricted to the algebra.

    The first-row block and last-column block swap with their order reversed;
    ``x[1,n]`` is fixed.
    """
    return HeisenbergElement(x.n, tuple(reversed(x.col)) + (x.row[-1],), tuple(reversed(x.row[:-1])))


def _interior(m: Matrix, n: int, what: str) -> Matrix:
    if m.shape != (n, n):
        raise SizeMismatch(f"{what} must be {n}x{n}, got {m.shape}")
    if not is_Cn(m):
        raise NotInCn(f"{what} has a nonzero boundary entry")
    return m


def anti_commutator_action(a: Matrix, x: HeisenbergElement) -> HeisenbergElement:
    """``{X, A} = XA + AX`` for ``A`` vanishing on its boundary."""
    n = x.n
    _interior(a, n, "A")
    inner = range(1, n - 1)
    xr = x.row[:-1]  # x[1,2..n-1]
    row = [sum((xr[j - 1] * a[j, i] for j in inner if xr[j - 1] and a[j, i]), _ZERO) for i in inner]
    col = [sum((a[i, j] * x.col[j - 1] for j in inner if x.col[j - 1] and a[i, j]), _ZERO) for i in inner]
    return HeisenbergElement(n, tuple(row) + (_ZERO,), tuple(col))


def side_mul(x: HeisenbergElement, m: Matrix, side: str) -> HeisenbergElement:
    """``X M`` (``side="right"``) or ``M X`` (``side="left"``) for ``M`` in C_n."""
    n = x.n
    _interior(m, n, "M")
    inner = range(1, n - 1)
    zeros_row = (_ZERO,) * (n - 1)
    zeros_col = (_ZERO,) * (n - 2)
    if side == "right":
        xr = x.row[:-1]
        row = tuple(sum((xr[j - 1] * m[j, i] for j in inner if xr[j - 1] and m[j, i]), _ZERO) for i in inner)
        return HeisenbergElement(n, row + (_ZERO,), zeros_col)
    if side == "left":
        col = tuple(sum((m[i, j] * x.col[j - 1] for j in inner if x.col[j - 1] and m[i, j]), _ZERO) for i in inner)
        return HeisenbergElement(n, zeros_row, col)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def is_Cn(m: Matrix) -> bool:
    """True iff the first and last rows and columns of ``m`` are zero."""
    if not m.is_square:
        raise NotSquare(f"expected a square matrix, got {m.shape}")
    n = m.nrows
    if n < 3:
        raise ValueError("C_n is defined for n >= 3")
    edge = (0, n - 1)
    return not any(
        m[i, j] for i in range(n) for j in range(n) if i in edge or j in edge
    )


def is_Pn(m: Matrix) -> bool:
    """Hollow skew-persymmetric with zero boundary."""
    if not is_Cn(m):
        return False
    n = m.nrows
    if anti_transpose(m) != -m:
        return False
    return not any(m[i, n - 1 - i] for i in range(n))


def is_central(x: HeisenbergElement) -> bool:
    return not any(x.row[:-1]) and not any(x.col)


def interior_identity(n: int) -> Matrix:
    """Ones on the diagonal at positions 2..n-1, zero elsewhere."""
    check_n(n)
    return Matrix(n, n, tuple(Fraction(int(i == j and 0 < i < n - 1)) for i in range(n) for j in range(n)))


def pn_free_positions(n: int) -> list[tuple[int, int]]:
    """1-based ``(i, j)`` strictly above the anti-diagonal of the interior, row-major."""
    return [(i, j) for i in range(2, n) for j in range(2, n) if i + j < n + 1]


def pn_from_params(n: int, values: Sequence) -> Matrix:
    """Build the P_n matrix whose free entries (in :func:`pn_free_positions` order) are ``values``."""
    pos = pn_free_positions(n)
    if len(values) != len(pos):
        raise SizeMismatch(f"P_{n} has {len(pos)} free entries, got {len(values)}")
    ent = [_ZERO] * (n * n)
    for (i, j), v in zip(pos, values):
        v = to_rational(v)
        ent[(i - 1) * n + (j - 1)] = v
        ent[(n - j) * n + (n - i)] = -v
    return Matrix(n, n, tuple(ent))


def cn_from_interior(n: int, values: Sequence) -> Matrix:
    """Build a C_n matrix from its ``(n-2)^2`` interior entries, row-major."""
    m = n - 2
    if len(values) != m * m:
        raise SizeMismatch(f"C_{n} has {m * m} interior entries, got {len(values)}")
    ent = [_ZERO] * (n * n)
    for p, v in enumerate(values):
        i, j = divmod(p, m)
        ent[(i + 1) * n + (j + 1)] = to_rational(v)
    return Matrix(n, n, tuple(ent))
