"""Exact characters of Schur and Weyl modules of northwest diagrams."""

__version__ = "0.1.0"

from .character import (
    check_complement_duality,
    module_dimension,
    poincare_polynomial,
    schur_character,
    weyl_character,
)
from .diagram import Diagram, blowup, is_northwest, lex_sort, parse_diagram, young_diagram, skew_diagram
from .oracle import tensor_schur_character
from .permutation import Permutation, monotone_sequence
from .polynomial import LaurentPolynomial, schur_expand, schur_polynomial, skew_schur_polynomial

__all__ = [
    "Diagram",
    "LaurentPolynomial",
    "Permutation",
    "blowup",
    "check_complement_duality",
    "is_northwest",
    "lex_sort",
    "module_dimension",
    "monotone_sequence",
    "parse_diagram",
    "poincare_polynomial",
    "schur_character",
    "schur_expand",
    "schur_polynomial",
    "skew_diagram",
    "skew_schur_polynomial",
    "tensor_schur_character",
    "weyl_character",
    "young_diagram",
]
