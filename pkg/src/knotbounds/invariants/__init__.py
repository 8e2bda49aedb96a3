"""Polynomial invariants and their special values."""

from .bracket import DEFAULT_BUDGET, BudgetExceeded, bracket_by_skein, jones, kauffman_bracket, loop_value
from .qpoly import QEngine, canonical_key, q_polynomial, unlink_value
from .special import (
    EISENSTEIN_MODULUS,
    JONES_MODULUS,
    InconsistentInvariants,
    SpecialValues,
    candidate_partner_jones,
    golden_form,
    golden_sign_from_det,
    jones_battery,
    special_values,
    traczyk_exponent,
)

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "bracket_by_skein",
    "jones",
    "kauffman_bracket",
    "loop_value",
    "QEngine",
    "canonical_key",
    "q_polynomial",
    "unlink_value",
    "EISENSTEIN_MODULUS",
    "JONES_MODULUS",
    "InconsistentInvariants",
    "SpecialValues",
    "candidate_partner_jones",
    "golden_form",
    "golden_sign_from_det",
    "jones_battery",
    "special_values",
    "traczyk_exponent",
]
