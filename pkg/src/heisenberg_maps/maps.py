"""Linear endomorphisms of the Heisenberg algebra and their canonical form.

A commuting linear map f (one with ``[f(X), X] = 0`` for every X) can be
written as

    f(X) = {X, A} + tau(X) B + C tau(X) + zeta(X) e[1,n]

with A vanishing on its boundary, B and C hollow skew-persymmetric, and zeta a
linear functional. :func:`decompose` reads (A, B, C, zeta) directly off the
coefficient matrix of f and :func:`reconstruct` goes back.

Indexing convention: the component functional ``f[1,i]`` is output coordinate
``i - 2`` (0-based) and ``f[j,n]`` is output coordinate ``n - 3 + j``; the
same offsets locate the inputs ``e[1,i]`` and ``e[j,n]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InvalidDecomposition, NotCommuting, SizeMismatch
from .heisenberg import (
    HeisenbergElement,
    anti_commutator_action,
    basis_element,
    bracket_coefficient,
    center_index,
    check_n,
    cn_from_interior,
    dim,
    interior_identity,
    is_Cn,
    is_Pn,
    pn_free_positions,
    pn_from_params,
    side_mul,
    tau,
)
from .linalg import Matrix, kernel_basis, mat_vec, rank, to_rational

_ZERO = Fraction(0)


@dataclass(frozen=True)
class LinearMap:
    """Column ``b`` of ``mat`` holds the coordinates of ``f(E_{b+1})``."""

    n: int
    mat: Matrix

    def __post_init__(self):
        check_n(self.n)
        d = dim(self.n)
        if self.mat.shape != (d, d):
            raise SizeMismatch(f"n={self.n} maps need a {d}x{d} matrix, got {self.mat.shape}")

    @classmethod
    def identity(cls, n: int) -> LinearMap:
        return cls(n, Matrix.identity(dim(n)))

    @classmethod
    def zero(cls, n: int) -> LinearMap:
        return cls(n, Matrix.zeros(dim(n)))

    @classmethod
    def from_vec(cls, n: int, v: Sequence) -> LinearMap:
        """Inverse of :meth:`vec` (column-major)."""
        d = dim(n)
        if len(v) != d * d:
            raise SizeMismatch(f"expected {d * d} entries, got {len(v)}")
        return cls(n, Matrix.from_columns([v[b * d:(b + 1) * d] for b in range(d)]))

    def vec(self) -> tuple:
        return self.mat.vec()

    def __call__(self, x: HeisenbergElement) -> HeisenbergElement:
        return apply(self, x)

    def __add__(self, other: LinearMap) -> LinearMap:
        if self.n != other.n:
            raise SizeMismatch(f"n={self.n} vs n={other.n}")
        return LinearMap(self.n, self.mat + other.mat)

    def __sub__(self, other: LinearMap) -> LinearMap:
        return self + LinearMap(other.n, -other.mat)

    def scale(self, c) -> LinearMap:
        return LinearMap(self.n, self.mat.scale(c))

    def row_component(self, i: int, b: int) -> Fraction:
        """``f[1,i](E_{b+1})``, for 2 <= i <= n."""
        return self.mat[i - 2, b]

    def col_component(self, j: int, b: int) -> Fraction:
        """``f[j,n](E_{b+1})``, for 2 <= j <= n-1."""
        return self.mat[self.n - 3 + j, b]


def e_row(n: int, i: int) -> int:
    """0-based basis index of ``e[1,i]``."""
    return i - 2


def e_col(n: int, j: int) -> int:
    """0-based basis index of ``e[j,n]``."""
    return n - 3 + j


@dataclass(frozen=True)
class CanonicalDecomposition:
    n: int
    A: Matrix
    B: Matrix
    C: Matrix
    zeta: tuple

    def __post_init__(self):
        check_n(self.n)
        object.__setattr__(self, "zeta", tuple(to_rational(v) for v in self.zeta))

    def validate(self) -> None:
        n = self.n
        for name in ("A", "B", "C"):
            m = getattr(self, name)
            if m.shape != (n, n):
                raise InvalidDecomposition(f"{name} must be {n}x{n}, got {m.shape}")
        if not is_Cn(self.A):
            raise InvalidDecomposition("A is not in C_n")
        if not is_Pn(self.B):
            raise InvalidDecomposition("B is not in P_n")
        if not is_Pn(self.C):
            raise InvalidDecomposition("C is not in P_n")
        if len(self.zeta) != dim(n):
            raise InvalidDecomposition(f"zeta must have {dim(n)} entries, got {len(self.zeta)}")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except InvalidDecomposition:
            return False
        return True


@dataclass(frozen=True)
class StandardFormWitness:
    """``f(X) = lam * X + (mu . coords(X)) e[1,n]``."""

    lam: Fraction
    mu: tuple


def apply(f: LinearMap, x: HeisenbergElement) -> HeisenbergElement:
    if f.n != x.n:
        raise SizeMismatch(f"map on n={f.n} applied to element with n={x.n}")
    return HeisenbergElement.from_coords(f.n, mat_vec(f.mat, x.coords))


def polarization_witness(f: LinearMap) -> tuple[int, int] | None:
    """First 1-based pair ``(a, b)``, ``a <= b``, with ``[f(E_a),E_b] + [f(E_b),E_a] != 0``.

    Over characteristic 0 the map is commuting exactly when no such pair exists.
    """
    n = f.n
    d = dim(n)
    cols = [f.mat.column(b) for b in range(d)]
    units = [basis_element(n, k + 1).coords for k in range(d)]
    for a in range(d):
        for b in range(a, d):
            phi = bracket_coefficient(cols[a], units[b], n) + bracket_coefficient(cols[b], units[a], n)
            if phi:
                return (a + 1, b + 1)
    return None


def is_commuting(f: LinearMap) -> bool:
    return polarization_witness(f) is None


def _require_commuting(f: LinearMap) -> None:
    w = polarization_witness(f)
    if w is not None:
        raise NotCommuting(f"map is not commuting; polarization fails at basis pair {w}")


@lru_cache(maxsize=None)
def structure_constants(n: int) -> tuple:
    """``c[k][m]``: e[1,n]-coefficient of ``[E_{k+1}, E_{m+1}]``."""
    d = dim(n)
    c = [[0] * d for _ in range(d)]
    for p in range(n - 2):
        c[p][n - 1 + p] = 1
        c[n - 1 + p][p] = -1
    return tuple(tuple(r) for r in c)


@lru_cache(maxsize=None)
def constraint_matrix(n: int) -> Matrix:
    """Linear system whose kernel is the space of commuting maps.

    Unknowns are ``vec(mat)`` (column-major); one row per basis pair ``a <= b``.
    """
    check_n(n)
    d = dim(n)
    c = structure_constants(n)
    rows = []
    for a in range(d):
        for b in range(a, d):
            r = [0] * (d * d)
            for k in range(d):
                r[a * d + k] += c[k][b]
                r[b * d + k] += c[k][a]
            rows.append(r)
    return Matrix.from_rows(rows)


def commuting_space_basis(n: int) -> list[LinearMap]:
    return [LinearMap.from_vec(n, v) for v in kernel_basis(constraint_matrix(n))]


def dimension_formula(n: int) -> int:
    """Parameter count of the canonical form: A, then B and C, then zeta."""
    check_n(n)
    return (n - 2) ** 2 + (n - 2) * (n - 3) + (2 * n - 3)


def parameter_count(n: int) -> dict[str, int]:
    return {
        "A": (n - 2) ** 2,
        "B": len(pn_free_positions(n)),
        "C": len(pn_free_positions(n)),
        "zeta": dim(n),
    }


def decomposition_from_params(n: int, params: Sequence) -> CanonicalDecomposition:
    """Unpack a flat parameter vector in the order A interior, B free, C free, zeta."""
    counts = parameter_count(n)
    if len(params) != sum(counts.values()):
        raise SizeMismatch(f"n={n} takes {sum(counts.values())} parameters, got {len(params)}")
    parts = {}
    start = 0
    for name, k in counts.items():
        parts[name] = list(params[start:start + k])
        start += k
    return CanonicalDecomposition(
        n,
        cn_from_interior(n, parts["A"]),
        pn_from_params(n, parts["B"]),
        pn_from_params(n, parts["C"]),
        tuple(parts["zeta"]),
    )


def parametrization_matrix(n: int) -> Matrix:
    """Columns are ``vec(reconstruct(d))`` for each unit parameter vector."""
    p = dimension_formula(n)
    cols = []
    for k in range(p):
        unit = [0] * p
        unit[k] = 1
        cols.append(reconstruct(decomposition_from_params(n, unit)).vec())
    return Matrix.from_columns(cols)


def decompose(f: LinearMap) -> CanonicalDecomposition:
    """Read off (A, B, C, zeta) so that :func:`reconstruct` returns ``f``.

    Raises :class:`NotCommuting` when ``f`` is not commuting.
    """
    _require_commuting(f)
    n = f.n
    inner = range(2, n)
    A = [[_ZERO] * n for _ in range(n)]
    B = [[_ZERO] * n for _ in range(n)]
    C = [[_ZERO] * n for _ in range(n)]
    for i in inner:
        for j in inner:
            A[i - 1][j - 1] = f.col_component(i, e_col(n, j))
            B[i - 1][j - 1] = -f.row_component(n - i + 1, e_col(n, j))
            C[i - 1][j - 1] = -f.col_component(n - j + 1, e_row(n, i))
    zeta = f.mat.row(center_index(n))
    return CanonicalDecomposition(n, Matrix.from_rows(A), Matrix.from_rows(B), Matrix.from_rows(C), zeta)


def reconstruct(d: CanonicalDecomposition) -> LinearMap:
    d.validate()
    n = d.n
    ci = center_index(n)
    cols = []
    for b in range(dim(n)):
        e = basis_element(n, b + 1)
        te = tau(e)
        y = anti_commutator_action(d.A, e) + side_mul(te, d.B, "right") + side_mul(te, d.C, "left")
        coords = list(y.coords)
        coords[ci] += d.zeta[b]
        cols.append(coords)
    return LinearMap(n, Matrix.from_columns(cols))


def lemma_l0_check(f: LinearMap) -> bool:
    """``f[1,i](e[i,n]) = f[i,n](e[1,i]) = 0`` for 2 <= i <= n-1."""
    _require_commuting(f)
    n = f.n
    return all(
        f.row_component(i, e_col(n, i)) == 0 and f.col_component(i, e_row(n, i)) == 0
        for i in range(2, n)
    )


def lemma_l1_check(f: LinearMap) -> bool:
    """The three pairwise symmetry relations between component functionals."""
    _require_commuting(f)
    n = f.n
    for i in range(2, n):
        for j in range(2, n):
            if f.col_component(j, e_row(n, i)) != -f.col_component(i, e_row(n, j)):
                return False
            if f.row_component(j, e_row(n, i)) != f.col_component(i, e_col(n, j)):
                return False
            if f.row_component(j, e_col(n, i)) != -f.row_component(i, e_col(n, j)):
                return False
    return True


def lemma_l23_check(f: LinearMap) -> bool:
    """Each component functional is determined by values on basis elements.

    For 2 <= i <= n-1 and every X:

        f[i,n](X) = sum_j f[1,j](e[1,i]) x[j,n] - x[1,j] f[j,n](e[1,i])
        f[1,i](X) = sum_j x[1,j] f[j,n](e[i,n]) - f[1,j](e[i,n]) x[j,n]

    Both sides are linear in X, so it suffices to compare on every E_k.
    """
    _require_commuting(f)
    n = f.n
    inner = range(2, n)
    for k in range(1, dim(n) + 1):
        x = basis_element(n, k)
        for i in inner:
            rhs = sum(
                (f.row_component(j, e_row(n, i)) * x.entry(j, n) - x.entry(1, j) * f.col_component(j, e_row(n, i))
                 for j in inner),
                _ZERO,
            )
            if f.col_component(i, k - 1) != rhs:
                return False
            rhs = sum(
                (x.entry(1, j) * f.col_component(j, e_col(n, i)) - f.row_component(j, e_col(n, i)) * x.entry(j, n)
                 for j in inner),
                _ZERO,
            )
            if f.row_component(i, k - 1) != rhs:
                return False
    return True


def is_standard_form(f: LinearMap) -> StandardFormWitness | None:
    """Witness ``(lam, mu)`` with ``f(X) = lam X + mu(X) e[1,n]``, or None."""
    d = decompose(f)
    n = f.n
    if not d.B.is_zero() or not d.C.is_zero():
        return None
    lam = d.A[1, 1]
    if d.A != interior_identity(n).scale(lam):
        return None
    mu = list(d.zeta)
    mu[center_index(n)] -= lam
    return StandardFormWitness(lam, tuple(mu))


def standard_form_map(n: int, lam, mu: Sequence) -> LinearMap:
    """The map ``X -> lam X + (mu . coords(X)) e[1,n]``."""
    lam = to_rational(lam)
    if len(mu) != dim(n):
        raise SizeMismatch(f"mu must have {dim(n)} entries, got {len(mu)}")
    rows = Matrix.identity(dim(n)).scale(lam).tolist()
    ci = center_index(n)
    for b, v in enumerate(mu):
        rows[ci][b] += to_rational(v)
    return LinearMap(n, Matrix.from_rows(rows))


def constraint_rank(n: int) -> int:
    return rank(constraint_matrix(n))
