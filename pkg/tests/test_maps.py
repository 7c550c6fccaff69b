from fractions import Fraction
import random

import pytest
import sympy

from heisenberg_maps.errors import InvalidDecomposition, NotCommuting, SizeMismatch
from heisenberg_maps.families import example_B, example_g, example_h, example_newer, example_r
from heisenberg_maps.heisenberg import (
    HeisenbergElement,
    basis_element,
    commutator,
    interior_identity,
    pn_free_positions,
    pn_from_params,
)
from heisenberg_maps.linalg import Matrix, rank
from heisenberg_maps.maps import (
    CanonicalDecomposition,
    LinearMap,
    StandardFormWitness,
    apply,
    commuting_space_basis,
    constraint_matrix,
    decompose,
    decomposition_from_params,
    dimension_formula,
    is_commuting,
    is_standard_form,
    lemma_l0_check,
    lemma_l1_check,
    lemma_l23_check,
    parametrization_matrix,
    polarization_witness,
    reconstruct,
    standard_form_map,
)

from conftest import dense_apply, dense_of, random_cn, random_element

F = Fraction
NS = range(3, 8)


def swap_map():
    """n = 3 map exchanging the e[1,2] and e[2,3] coordinates."""
    return LinearMap(3, Matrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]]))


def random_map(rng, n, lo=-3, hi=3):
    d = 2 * n - 3
    return LinearMap(n, Matrix(d, d, [rng.randint(lo, hi) for _ in range(d * d)]))


def random_kernel_combo(rng, n):
    basis = commuting_space_basis(n)
    out = LinearMap.zero(n)
    for f in basis:
        out = out + f.scale(rng.randint(-5, 5))
    return out


def random_decomp(rng, n):
    return decomposition_from_params(n, [rng.randint(-9, 9) for _ in range(dimension_formula(n))])


def dense_bracket_coeff(n, coeffs, x):
    dx = dense_of(x)
    fx = dense_apply(n, coeffs, dx)
    c = fx.dot(dx) - dx.dot(fx)
    assert all(c[i, j] == 0 for i in range(n) for j in range(n) if (i, j) != (0, n - 1))
    return c[0, n - 1]


class TestApply:
    def test_identity_and_zero(self, rng):
        for n in NS:
            x = random_element(rng, n)
            assert apply(LinearMap.identity(n), x) == x
            assert apply(LinearMap.zero(n), x) == HeisenbergElement.zero(n)

    def test_example_r(self):
        assert apply(example_r(4, 1), basis_element(4, 1)) == basis_element(4, 2)

    def test_linear(self, rng):
        f = random_map(rng, 5)
        x, y = random_element(rng, 5), random_element(rng, 5)
        assert apply(f, x + y.scale(3)) == apply(f, x) + apply(f, y).scale(3)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            apply(LinearMap.identity(3), basis_element(4, 1))


class TestIsCommuting:
    def test_identity(self):
        assert all(is_commuting(LinearMap.identity(n)) for n in NS)

    def test_example_g(self, rng):
        for n in NS:
            assert is_commuting(example_g(n, [rng.randint(-9, 9) for _ in range(n - 1)]))

    def test_swap_map(self):
        f = swap_map()
        assert not is_commuting(f)
        assert polarization_witness(f) == (1, 1)
        # dense oracle at X = E_1 = e[1,2]
        coeffs = f.mat.tolist()
        assert dense_bracket_coeff(3, coeffs, basis_element(3, 1)) == -1
        # f fixes e[1,2] + e[2,3], so that particular X is not a witness
        assert dense_bracket_coeff(3, coeffs, basis_element(3, 1) + basis_element(3, 3)) == 0

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_polarization_soundness(self, n):
        rng = random.Random(7 + n)
        xs = [random_element(rng, n) for _ in range(200)]
        maps = commuting_space_basis(n) + [random_kernel_combo(rng, n) for _ in range(5)]
        maps += [random_map(rng, n) for _ in range(10)]
        for f in maps:
            w = polarization_witness(f)
            if w is None:
                assert all(commutator(apply(f, x), x).a == 0 for x in xs)
            else:
                a, b = (basis_element(n, k) for k in w)
                # the failing bilinear term forces one of E_a, E_b, E_a + E_b to fail
                brackets = [commutator(apply(f, x), x).a for x in (a, b, a + b)]
                assert any(brackets)


class TestConstraintSystem:
    # one row per unordered basis pair: (2n-3)(2n-2)/2
    @pytest.mark.parametrize("n,shape", [(3, (6, 9)), (4, (15, 25)), (5, (28, 49)), (7, (66, 121))])
    def test_shape(self, n, shape):
        assert constraint_matrix(n).shape == shape

    @pytest.mark.parametrize("n", [3, 4])
    def test_matches_dense_construction(self, n):
        """Rebuild every row from dense products of unit maps."""
        d = 2 * n - 3
        rows = []
        for a in range(d):
            for b in range(a, d):
                row = []
                for u in range(d * d):
                    col, k = divmod(u, d)
                    coeffs = [[int(r == k and c == col) for c in range(d)] for r in range(d)]
                    ea, eb = dense_of(basis_element(n, a + 1)), dense_of(basis_element(n, b + 1))
                    fa, fb = dense_apply(n, coeffs, ea), dense_apply(n, coeffs, eb)
                    phi = fa.dot(eb) - eb.dot(fa) + fb.dot(ea) - ea.dot(fb)
                    row.append(phi[0, n - 1])
                rows.append(row)
        assert constraint_matrix(n) == Matrix.from_rows(rows)

    @pytest.mark.parametrize("n,expected", [(3, 4), (4, 11), (5, 22)])
    def test_kernel_dimension_sympy(self, n, expected):
        c = constraint_matrix(n)
        ref = sympy.Matrix(c.tolist())
        assert c.ncols - ref.rank() == expected
        assert len(commuting_space_basis(n)) == expected

    @pytest.mark.parametrize("n", NS)
    def test_parametrization_in_kernel(self, n):
        c, p = constraint_matrix(n), parametrization_matrix(n)
        assert (c @ p).is_zero()


class TestDimensions:
    @pytest.mark.parametrize("n,expected", [(3, 4), (4, 11), (5, 22), (6, 37), (7, 56)])
    def test_formula_matches_kernel(self, n, expected):
        assert dimension_formula(n) == expected
        assert len(commuting_space_basis(n)) == expected

    @pytest.mark.parametrize("n,shape", [(3, (9, 4)), (4, (25, 11)), (5, (49, 22))])
    def test_parametrization_shape(self, n, shape):
        assert parametrization_matrix(n).shape == shape

    def test_parametrization_rank_sympy(self):
        p = parametrization_matrix(5)
        assert sympy.Matrix(p.tolist()).rank() == 22
        assert rank(p) == 22

    def test_n3_parameter_split(self):
        assert len(pn_free_positions(3)) == 0
        assert pn_from_params(3, []) == Matrix.zeros(3)


class TestDecompose:
    def test_zero(self):
        for n in NS:
            d = decompose(LinearMap.zero(n))
            assert d.A.is_zero() and d.B.is_zero() and d.C.is_zero() and not any(d.zeta)

    @pytest.mark.parametrize("n", range(4, 8))
    @pytest.mark.parametrize("a", [F(1), F(-2), F(3, 7)])
    def test_example_r(self, n, a):
        f = example_r(n, a)
        d = decompose(f)
        assert d.A == Matrix.unit(n, 1, n - 2).scale(a)
        assert d.B.is_zero() and d.C.is_zero() and not any(d.zeta)
        assert reconstruct(d) == f

    @pytest.mark.parametrize("n", NS)
    def test_example_g(self, n, rng):
        coeffs = [F(rng.randint(-9, 9)) for _ in range(n - 1)]
        f = example_g(n, coeffs)
        d = decompose(f)
        expected_a = [[0] * n for _ in range(n)]
        for i in range(1, n - 1):
            expected_a[i][i] = coeffs[i - 1]
        assert d.A == Matrix.from_rows(expected_a)
        assert d.B.is_zero() and d.C.is_zero()
        zeta = [0] * (2 * n - 3)
        zeta[n - 2] = coeffs[-1]
        assert d.zeta == tuple(map(F, zeta))
        assert reconstruct(d) == f

    def test_not_commuting(self):
        with pytest.raises(NotCommuting):
            decompose(swap_map())

    @pytest.mark.parametrize("n", NS)
    def test_round_trip_basis(self, n):
        for f in commuting_space_basis(n):
            d = decompose(f)
            assert d.is_valid()
            assert reconstruct(d) == f

    @pytest.mark.parametrize("n", NS)
    def test_decompose_inverts_reconstruct(self, n, rng):
        for _ in range(20):
            d = random_decomp(rng, n)
            assert decompose(reconstruct(d)) == d

    @pytest.mark.parametrize("n", NS)
    def test_zeta_additive(self, n, rng):
        for _ in range(10):
            f, g = random_kernel_combo(rng, n), random_kernel_combo(rng, n)
            zf, zg = decompose(f).zeta, decompose(g).zeta
            assert decompose(f + g).zeta == tuple(a + b for a, b in zip(zf, zg))
            x = random_element(rng, n)
            # zeta(X) is the e[1,n] coordinate of f(X)
            assert sum(z * c for z, c in zip(zf, x.coords)) == apply(f, x).coords[n - 2]


class TestReconstruct:
    def test_zero(self):
        for n in NS:
            d = CanonicalDecomposition(n, Matrix.zeros(n), Matrix.zeros(n), Matrix.zeros(n), (0,) * (2 * n - 3))
            assert reconstruct(d) == LinearMap.zero(n)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_example_h(self, n):
        b = example_B(n)
        d = CanonicalDecomposition(n, Matrix.zeros(n), b, -b, (0,) * (2 * n - 3))
        assert reconstruct(d) == example_h(n)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_example_newer(self, n, rng):
        from heisenberg_maps.families import example_C

        a = random_cn(rng, n)
        d = CanonicalDecomposition(n, a, example_B(n), example_C(n), (0,) * (2 * n - 3))
        f = reconstruct(d)
        assert f == example_newer(n, a)
        assert is_commuting(f)

    def test_invalid(self):
        n = 5
        z = (0,) * 7
        with pytest.raises(InvalidDecomposition):
            reconstruct(CanonicalDecomposition(n, Matrix.unit(n, 0, 0), Matrix.zeros(n), Matrix.zeros(n), z))
        with pytest.raises(InvalidDecomposition):
            reconstruct(CanonicalDecomposition(n, Matrix.zeros(n), interior_identity(n), Matrix.zeros(n), z))
        with pytest.raises(InvalidDecomposition):
            reconstruct(CanonicalDecomposition(n, Matrix.zeros(n), Matrix.zeros(n), interior_identity(n), z))
        with pytest.raises(InvalidDecomposition):
            reconstruct(CanonicalDecomposition(n, Matrix.zeros(n), Matrix.zeros(n), Matrix.zeros(n), (0,) * 3))

    @pytest.mark.parametrize("n", NS)
    def test_converse(self, n, rng):
        for _ in range(30):
            assert is_commuting(reconstruct(random_decomp(rng, n)))

    @pytest.mark.parametrize("n", NS)
    def test_block_separation(self, n, rng):
        d_ = 2 * n - 3
        row_out, center, col_out = range(0, n - 2), n - 2, range(n - 1, d_)
        row_in, col_in = range(0, n - 2), range(n - 1, d_)
        zero = Matrix.zeros(n)
        zeta0 = (0,) * d_
        for _ in range(10):
            d = random_decomp(rng, n)
            full = reconstruct(d).mat

            def changed(d2):
                diff = full - reconstruct(d2).mat
                return {(i, j) for i in range(d_) for j in range(d_) if diff[i, j]}

            assert full.row(center) == d.zeta
            a_cells = changed(CanonicalDecomposition(n, zero, d.B, d.C, d.zeta))
            b_cells = changed(CanonicalDecomposition(n, d.A, zero, d.C, d.zeta))
            c_cells = changed(CanonicalDecomposition(n, d.A, d.B, zero, d.zeta))
            z_cells = changed(CanonicalDecomposition(n, d.A, d.B, d.C, zeta0))
            a_block = {(i, j) for i in row_out for j in row_in} | {(i, j) for i in col_out for j in col_in}
            assert a_cells <= a_block
            assert b_cells <= {(i, j) for i in row_out for j in col_in}
            assert c_cells <= {(i, j) for i in col_out for j in row_in}
            assert z_cells <= {(center, j) for j in range(d_)}


class TestLemmas:
    def test_trivial(self):
        for n in NS:
            assert lemma_l0_check(LinearMap.identity(n))
            assert lemma_l1_check(LinearMap.zero(n))
            assert lemma_l23_check(LinearMap.zero(n))

    @pytest.mark.parametrize("n", NS)
    def test_basis(self, n):
        for f in commuting_space_basis(n):
            assert lemma_l0_check(f) and lemma_l1_check(f) and lemma_l23_check(f)

    def test_examples(self, rng):
        assert lemma_l0_check(example_h(6))
        assert lemma_l1_check(example_newer(5, random_cn(rng, 5)))
        assert lemma_l23_check(example_g(5, [1, 2, 3, 4]))

    def test_require_commuting(self):
        for check in (lemma_l0_check, lemma_l1_check, lemma_l23_check):
            with pytest.raises(NotCommuting):
                check(swap_map())


class TestStandardForm:
    @pytest.mark.parametrize("lam", [F(0), F(3), F(-5, 2)])
    def test_scalar_identity(self, lam):
        for n in NS:
            w = is_standard_form(LinearMap.identity(n).scale(lam))
            assert w == StandardFormWitness(lam, (F(0),) * (2 * n - 3))

    def test_example_g_equal(self):
        for n in NS:
            w = is_standard_form(example_g(n, [7] * (n - 1)))
            assert w == StandardFormWitness(F(7), (F(0),) * (2 * n - 3))

    def test_example_g_unequal(self):
        assert is_standard_form(example_g(4, [1, 2, 3])) is None

    def test_example_g_last_coefficient(self):
        # only a_{n-1} differs: still standard, the difference goes into mu
        w = is_standard_form(example_g(5, [2, 2, 2, 9]))
        assert w.lam == 2
        assert w.mu == (0, 0, 0, 7, 0, 0, 0)

    def test_not_standard(self):
        assert is_standard_form(example_h(6)) is None
        assert is_standard_form(example_r(5, 1)) is None

    @pytest.mark.parametrize("n", NS)
    def test_witness_reproduces_map(self, n, rng):
        for _ in range(10):
            lam = F(rng.randint(-9, 9))
            mu = [F(rng.randint(-9, 9)) for _ in range(2 * n - 3)]
            f = standard_form_map(n, lam, mu)
            w = is_standard_form(f)
            assert w is not None
            assert standard_form_map(n, w.lam, w.mu) == f
            x = random_element(rng, n)
            expected = x.scale(lam).coords[: n - 2] + (lam * x.coords[n - 2] + sum(m * c for m, c in zip(mu, x.coords)),) + x.scale(lam).coords[n - 1:]
            assert apply(f, x).coords == expected
