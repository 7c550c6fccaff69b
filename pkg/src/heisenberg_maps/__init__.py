"""Commuting linear maps on the n x n Heisenberg algebra, in exact arithmetic."""

from .errors import (
    DimensionMismatch,
    HeisenbergError,
    IndexOutOfRange,
    InvalidDecomposition,
    NotCommuting,
    NotInCn,
    NotSquare,
    ParseError,
    SizeMismatch,
    UnsupportedN,
    WrongCoefficientCount,
)
from .families import example_B, example_C, example_g, example_h, example_newer, example_r
from .heisenberg import (
    CenterElement,
    HeisenbergElement,
    anti_commutator_action,
    basis_element,
    commutator,
    h_mul,
    is_central,
    is_Cn,
    is_Pn,
    side_mul,
    tau,
)
from .linalg import Matrix, anti_transpose, format_rational, kernel_basis, mat_mul, parse_rational, rank, rref
from .maps import (
    CanonicalDecomposition,
    LinearMap,
    StandardFormWitness,
    apply,
    commuting_space_basis,
    constraint_matrix,
    decompose,
    dimension_formula,
    is_commuting,
    is_standard_form,
    lemma_l0_check,
    lemma_l1_check,
    lemma_l23_check,
    parametrization_matrix,
    reconstruct,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalDecomposition",
    "CenterElement",
    "DimensionMismatch",
    "HeisenbergElement",
    "HeisenbergError",
    "IndexOutOfRange",
    "InvalidDecomposition",
    "LinearMap",
    "Matrix",
    "NotCommuting",
    "NotInCn",
    "NotSquare",
    "ParseError",
    "SizeMismatch",
    "StandardFormWitness",
    "UnsupportedN",
    "WrongCoefficientCount",
    "anti_commutator_action",
    "anti_transpose",
    "apply",
    "basis_element",
    "commutator",
    "commuting_space_basis",
    "constraint_matrix",
    "decompose",
    "dimension_formula",
    "example_B",
    "example_C",
    "example_g",
    "example_h",
    "example_newer",
    "example_r",
    "format_rational",
    "h_mul",
    "is_Cn",
    "is_Pn",
    "is_central",
    "is_commuting",
    "is_standard_form",
    "kernel_basis",
    "lemma_l0_check",
    "lemma_l1_check",
    "lemma_l23_check",
    "mat_mul",
    "parametrization_matrix",
    "parse_rational",
    "rank",
    "reconstruct",
    "rref",
    "side_mul",
    "tau",
]
