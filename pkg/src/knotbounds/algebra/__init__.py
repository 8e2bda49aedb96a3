"""Exact arithmetic: Laurent polynomials, quadratic rings, integer matrices."""

from .laurent import LaurentPoly, poly_arith
from .matrices import (
    SNFResult,
    determinant,
    is_symmetric,
    mat_mul,
    rational_inverse,
    signature,
    smith_normal_form,
)
from .quadratic import EISENSTEIN, GAUSSIAN, GOLDEN, MINUS_ONE, QuadRing, QuadValue

__all__ = [
    "LaurentPoly",
    "poly_arith",
    "SNFResult",
    "determinant",
    "is_symmetric",
    "mat_mul",
    "rational_inverse",
    "signature",
    "smith_normal_form",
    "QuadRing",
    "QuadValue",
    "GOLDEN",
    "EISENSTEIN",
    "GAUSSIAN",
    "MINUS_ONE",
]
