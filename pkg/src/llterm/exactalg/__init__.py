"""Exact arithmetic substrate: integer polynomials, algebraic numbers,
interval boxes, number-field elements and exact linear algebra."""

from .intpoly import IntPolynomial, cyclotomic, mignotte_separation_lb
from .boxes import Box, sqrt_bounds
from .algebraic import (
    ALG_I,
    AlgebraicNumber,
    MINUS_ONE,
    NEG_I,
    ONE,
    ZERO,
    isolate_roots,
    root_of_unity,
    select_root,
)
from .numberfield import NumberField, FieldElement
from .ratmat import RationalMatrix, FieldMatrix, solve_linear_exact

__all__ = [
    "IntPolynomial",
    "cyclotomic",
    "mignotte_separation_lb",
    "Box",
    "sqrt_bounds",
    "AlgebraicNumber",
    "isolate_roots",
    "root_of_unity",
    "select_root",
    "ZERO",
    "ONE",
    "MINUS_ONE",
    "ALG_I",
    "NEG_I",
    "NumberField",
    "FieldElement",
    "RationalMatrix",
    "FieldMatrix",
    "solve_linear_exact",
]
