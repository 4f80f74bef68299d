"""The ideal of c-representations of a two-generator group.

A c-representation sends a and b to unit quaternions A, B with equal
scalar part.  With x = A+ and y = -(A-B-)+ the relation w1(A, B) = w2(A, B)
holds exactly when the first column of w1(m(A), m(B)) - w2(m(A), m(B))
vanishes, giving four polynomials in Z[x, y].
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotExpressible
from .polyalg import Ideal, Poly, content_primitive, groebner
from .presentation import Presentation, parse_presentation
from .quatsym import E0, PolyVector, eval_word

# Poly slots used for trace coordinates: x holds x' and y holds z.
TRACE_NAMES = {"x": "x'", "y": "z"}


@dataclass(frozen=True)
class CIdeal:
    """Raw 4-vector and simplified ideal of a presentation."""

    raw: PolyVector
    simplified: Ideal
    presentation: Presentation

    @property
    def generators(self):
        return self.simplified.generators

    def to_json(self, trace_coords=False):
        d = {"raw": self.raw.to_json(), "ideal": self.simplified.to_json()}
        if trace_coords:
            d["trace_coords"] = [to_trace_coords(g).to_json() for g in self.simplified]
        return d


def _is_conjugating_form(p):
    if not p.is_balanced:
        return False
    l, r = p.lhs.letters, p.rhs.letters
    return bool(l) and bool(r) and l[0] == "a" and r[-1] == "b" and l[1:] == r[:-1]


def c_ideal(p) -> CIdeal:
    """Compute the ideal of c-representations of a presentation.

    Parameters
    ----------
    p : Presentation or str
        Balanced form ``w1 = w2`` is used directly; a relator ``w`` is read
        as ``w = 1``.

    Returns
    -------
    CIdeal
        ``raw`` is ``(w1(m(A), m(B)) - w2(m(A), m(B))) e0``; ``simplified`` is
        the reduced graded-lex Gröbner basis of its nonzero entries.
    """
    if isinstance(p, str):
        p = parse_presentation(p)
    w1, w2 = p.sides()
    raw = (eval_word(w1) - eval_word(w2)) @ E0
    if _is_conjugating_form(p) and not (raw[0].is_zero() and raw[3].is_zero()):
        warnings.warn(f"first/last raw entries do not vanish for {p}", RuntimeWarning)
    simplified = groebner(Ideal.from_polys(raw), "grlex")
    return CIdeal(raw, simplified, p)


def to_trace_coords(p) -> Poly:
    """Rewrite a polynomial in x, y in the coordinates x' = 4x^2 - 2, z = 2x^2 - 2y.

    The result is primitive with integer coefficients and is stored with x'
    in the ``x`` slot and z in the ``y`` slot (see ``TRACE_NAMES``).

    Raises
    ------
    NotExpressible
        If ``p`` contains odd powers of x or involves s.
    """
    p = Poly.coerce(p)
    if "s" in p.variables():
        raise NotExpressible("trace coordinates are defined for polynomials in x, y only")
    if any(e[0] % 2 for e in p.terms):
        raise NotExpressible(f"{p} has odd powers of x")
    if p.is_zero():
        return p
    x2 = (Poly.var("x") + 2).scale(Fraction(1, 4))
    y = x2 - Poly.var("y").scale(Fraction(1, 2))
    out = Poly()
    for (ex, ey, _), c in p.terms.items():
        out = out + (x2 ** (ex // 2)) * (y ** ey) * c
    if out.is_zero():
        return out
    return content_primitive(out)[1]


def trace_str(p, spaced=True):
    return p.to_str(spaced=spaced, names=TRACE_NAMES)


@dataclass(frozen=True)
class ReducibleLocus:
    on_upper_parabola: bool
    on_lower_parabola: bool
    realizable_by_reducible: bool


def reducible_locus(x0, y0, kind="knot", tol=1e-9) -> ReducibleLocus:
    """Where (x0, y0) sits relative to the parabolas y = +-(1 - x^2).

    Points of the upper parabola are characters of reducible
    representations of every 2-bridge group.  The lower parabola is reached
    by reducible representations of links only, except at (+-1, 0).
    """
    if kind not in ("knot", "link"):
        raise ValueError("kind must be 'knot' or 'link'")
    x0, y0 = float(x0), float(y0)
    upper = abs(y0 - (1 - x0 * x0)) < tol
    lower = abs(y0 - (x0 * x0 - 1)) < tol
    corner = abs(abs(x0) - 1) < tol and abs(y0) < tol
    realizable = upper or (lower and (kind == "link" or corner))
    return ReducibleLocus(upper, lower, realizable)
