"""Exact integer computer algebra: sparse polynomials, lattice echelon
forms, Smith invariants, and finitely presented graded rings."""

from .lattice import (
    KERNEL_NAME,
    Echelon,
    flat_from_pairs,
    smith_invariants_of_rows,
    xgcd,
)
from .poly import (
    IntPolynomial,
    Mono,
    mono_degree,
    mono_divides,
    mono_mul,
    mono_sort_key,
    name_elements,
    subset_name,
    symbol_degree,
    symbol_key,
    term_sort_key,
)
from .presentation import (
    GradedComponent,
    GradedPresentation,
    InvariantFactors,
    NotDivisibleError,
    PresentationError,
    divide_in_quotient,
    graded_component,
    hilbert_function,
    reduces_to_zero,
    smith_invariants,
)

__all__ = [
    "KERNEL_NAME",
    "Echelon",
    "flat_from_pairs",
    "smith_invariants_of_rows",
    "xgcd",
    "IntPolynomial",
    "Mono",
    "mono_degree",
    "mono_divides",
    "mono_mul",
    "mono_sort_key",
    "name_elements",
    "subset_name",
    "symbol_degree",
    "symbol_key",
    "term_sort_key",
    "GradedComponent",
    "GradedPresentation",
    "InvariantFactors",
    "NotDivisibleError",
    "PresentationError",
    "divide_in_quotient",
    "graded_component",
    "hilbert_function",
    "reduces_to_zero",
    "smith_invariants",
]
