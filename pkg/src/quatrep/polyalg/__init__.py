"""Exact polynomial arithmetic, real root isolation and Gröbner bases."""

from .groebner import Ideal, groebner, ideal_contains, ideal_equal, reduce_poly
from .poly import (
    ONE, ORDERS, S, VARS, X, Y, ZERO, Poly, add, content_primitive, evaluate,
    grlex_key, lex_key, mul, neg, parse_poly, primitive, scale,
)
from .roots import DEFAULT_EPS, root_values, sturm_sequence, univariate_real_roots

__all__ = [
    "Poly", "Ideal", "X", "Y", "S", "ONE", "ZERO", "VARS", "ORDERS",
    "add", "mul", "neg", "scale", "evaluate", "content_primitive", "primitive",
    "parse_poly", "grlex_key", "lex_key",
    "groebner", "ideal_equal", "ideal_contains", "reduce_poly",
    "univariate_real_roots", "root_values", "sturm_sequence", "DEFAULT_EPS",
]
