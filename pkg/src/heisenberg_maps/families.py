"""Explicit commuting maps that are not of the standard form."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotInCn, UnsupportedN, WrongCoefficientCount
from .heisenberg import check_n, dim, is_Cn, side_mul, tau, basis_element
from .linalg import Matrix, to_rational
from .maps import CanonicalDecomposition, LinearMap, reconstruct


def example_r(n: int, a) -> LinearMap:
    """``X -> a x[1,2] e[1,n-1] + a x[n-1,n] e[2,n]``; needs n >= 4."""
    check_n(n)
    if n == 3:
        raise UnsupportedN("example r needs n >= 4 (e[1,n-1] coincides with e[1,2] at n = 3)")
    a = to_rational(a)
    d = dim(n)
    rows = [[0] * d for _ in range(d)]
    rows[n - 3][0] = a          # e[1,2] -> e[1,n-1]
    rows[n - 1][2 * n - 4] = a  # e[n-1,n] -> e[2,n]
    return LinearMap(n, Matrix.from_rows(rows))


def example_g(n: int, a: Sequence) -> LinearMap:
    """Diagonal map scaling ``e[1,i+1]`` and ``e[i+1,n]`` by ``a[i-1]``."""
    check_n(n)
    if len(a) != n - 1:
        raise WrongCoefficientCount(f"example g on n={n} takes {n - 1} coefficients, got {len(a)}")
    a = [to_rational(v) for v in a]
    diag = a + a[: n - 2]
    d = dim(n)
    return LinearMap(n, Matrix(d, d, tuple(diag[i] if i == j else 0 for i in range(d) for j in range(d))))


def example_B(n: int) -> Matrix:
    check_n(n)
    ent = [[0] * n for _ in range(n)]
    for j in range(2, n - 1):
        ent[1][j - 1] = 1
    for i in range(3, n - 1):
        ent[i - 1][1] = 1
        ent[i - 1][n - 2] = -1
    for j in range(3, n):
        ent[n - 2][j - 1] = -1
    return Matrix.from_rows(ent)


def example_C(n: int) -> Matrix:
    """Interior sign pattern: +1 above the anti-diagonal, -1 below, 0 on it."""
    check_n(n)
    ent = [[0] * n for _ in range(n)]
    for i in range(2, n):
        for j in range(2, n):
            s = i + j - (n + 1)
            ent[i - 1][j - 1] = -1 if s > 0 else (1 if s < 0 else 0)
    return Matrix.from_rows(ent)


def example_h(n: int) -> LinearMap:
    """``X -> [tau(X), B]`` with B from :func:`example_B`."""
    B = example_B(n)
    cols = []
    for k in range(1, dim(n) + 1):
        t = tau(basis_element(n, k))
        cols.append((side_mul(t, B, "right") - side_mul(t, B, "left")).coords)
    return LinearMap(n, Matrix.from_columns(cols))


def example_newer(n: int, a: Matrix) -> LinearMap:
    """``X -> {X, A} + tau(X) B + C tau(X)`` with the fixed B and C above."""
    check_n(n)
    if a.shape != (n, n) or not is_Cn(a):
        raise NotInCn("A must be an n x n matrix with zero boundary")
    zeta = (Fraction(0),) * dim(n)
    return reconstruct(CanonicalDecomposition(n, a, example_B(n), example_C(n), zeta))


EXAMPLES = ("r", "g", "h", "newer")
