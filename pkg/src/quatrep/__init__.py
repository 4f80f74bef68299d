"""Representations of two-generator groups in unit quaternion groups.

Modules
-------
presentation
    Words, presentations and 2-bridge knot groups.
polyalg
    Exact polynomials in x, y, s, real root isolation, Gröbner bases.
quatsym
    Symbolic multiplication matrices and the conjugation action.
variety
    The ideal of c-representations and related coordinates.
classify
    Explicit quaternion pairs at real points of the variety.
affine
    Affine c-representations and axis/shift decomposition.
numerics
    Sampling of the real curve and region profiles.
"""

__version__ = "0.1.0"

from .affine import AffineElement, affine_ideal, axis_shift, cocycle_of_word, fox_derivatives
from .classify import (
    ClassifiedPoint, NumQuaternion, Region, classify, classify_point, construct_pair,
    embed_2x2, geometric_invariant, irreducibility_test, so_matrix_pair, verify_relator,
)
from .numerics import emit_csv, region_profile, sample_variety
from .polyalg import Ideal, Poly, groebner, parse_poly
from .presentation import Presentation, Word, parse_presentation, parse_word, two_bridge
from .quatsym import AlgebraParams, conj_action, eval_word, rotation_matrix
from .variety import c_ideal, reducible_locus, to_trace_coords

__all__ = [
    "AffineElement", "AlgebraParams", "ClassifiedPoint", "Ideal", "NumQuaternion", "Poly",
    "Presentation", "Region", "Word", "affine_ideal", "axis_shift", "c_ideal", "classify",
    "classify_point", "cocycle_of_word", "conj_action", "construct_pair", "embed_2x2",
    "emit_csv", "eval_word", "fox_derivatives", "geometric_invariant", "groebner",
    "irreducibility_test", "parse_poly", "parse_presentation", "parse_word",
    "reducible_locus", "region_profile", "rotation_matrix", "sample_variety",
    "so_matrix_pair", "to_trace_coords", "two_bridge", "verify_relator",
]
