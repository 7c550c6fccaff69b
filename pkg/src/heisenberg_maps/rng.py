"""Deterministic integer stream for synthetic maps.

splitmix64 is used instead of :mod:`random` so the stream is fixed by its
definition, independent of the Python version.
"""

from __future__ import annotations

from fractions import Fraction

from .heisenberg import dim
from .maps import CanonicalDecomposition, decomposition_from_params, dimension_formula

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def small_int(self) -> int:
        """Uniform-ish integer in [-9, 9]."""
        return self.next_u64() % 19 - 9

    def small_ints(self, k: int) -> list[int]:
        return [self.small_int() for _ in range(k)]


def random_decomposition(rng: SplitMix64, n: int) -> CanonicalDecomposition:
    return decomposition_from_params(n, [Fraction(v) for v in rng.small_ints(dimension_formula(n))])


def random_standard_params(rng: SplitMix64, n: int) -> tuple[Fraction, list[Fraction]]:
    """Draw lambda, then the ``2n - 3`` central functional coefficients."""
    lam = Fraction(rng.small_int())
    return lam, [Fraction(v) for v in rng.small_ints(dim(n))]
