"""Dense n x n oracles built with numpy object arrays of Fractions.

These never go through the package's compact representation, so they serve
as an independent check on it.
"""

from fractions import Fraction
import random

import numpy as np
import pytest

from heisenberg_maps.heisenberg import HeisenbergElement
from heisenberg_maps.linalg import Matrix


def dense_from_coords(n, coords):
    """Place row coordinates at (1, j) and column coordinates at (i, n), 1-based."""
    d = np.full((n, n), Fraction(0), dtype=object)
    for j in range(2, n + 1):
        d[0, j - 1] = Fraction(coords[j - 2])
    for i in range(2, n):
        d[i - 1, n - 1] = Fraction(coords[n - 3 + i])
    return d


def dense_of(x):
    return dense_from_coords(x.n, x.coords)


def np_of(m: Matrix):
    return np.array(m.tolist(), dtype=object).reshape(m.nrows, m.ncols)


def dense_anti_transpose(d):
    return d[::-1, ::-1].T


def dense_apply(n, coeffs, x_dense):
    """Apply a coefficient matrix (list of rows) to a dense element, returning dense."""
    dd = 2 * n - 3
    coords = [x_dense[0, j - 1] for j in range(2, n + 1)] + [x_dense[i - 1, n - 1] for i in range(2, n)]
    out = [sum((coeffs[k][b] * coords[b] for b in range(dd)), Fraction(0)) for k in range(dd)]
    return dense_from_coords(n, out)


def random_element(rng: random.Random, n, lo=-9, hi=9):
    return HeisenbergElement.from_coords(n, [rng.randint(lo, hi) for _ in range(2 * n - 3)])


def random_cn(rng: random.Random, n, lo=-9, hi=9):
    ent = [[0] * n for _ in range(n)]
    for i in range(1, n - 1):
        for j in range(1, n - 1):
            ent[i][j] = rng.randint(lo, hi)
    return Matrix.from_rows(ent)


@pytest.fixture
def rng():
    return random.Random(20240611)
