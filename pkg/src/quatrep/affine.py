"""Affine c-representations into the semidirect product H0 x| U1.

An affine element (v, A) acts on pure quaternions by z -> A z A^-1 + v.
A representation sends a -> (v_a, A), b -> (v_b, B); its translational
parts form a cocycle v(g h) = v(g) + c(g) v(h).  After conjugation one may
take v_a = s A- and v_b = s B- + (A-B-)-, so the relation adds polynomial
conditions in x, y, s to the ideal of the linear parts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classify import NumQuaternion
from .errors import ZeroAxisDirection
from .polyalg import ONE, S, ZERO, Ideal, groebner
from .presentation import Presentation, Word, parse_presentation
from .quatsym import PolyVector, conj_action, eval_conj, rotation_matrix
from .variety import c_ideal

ZERO_COCYCLE = PolyVector([ZERO] * 4)


def normal_form_cocycles(minus_sign=False):
    """``(v_a, v_b) = (s A-, s B- +- (A-B-)-)`` in basis coordinates."""
    return PolyVector([0, S, 0, 0]), PolyVector([0, 0, S, -ONE if minus_sign else ONE])


def _letter_cocycle(c, v_a, v_b):
    if c == "a":
        return v_a
    if c == "b":
        return v_b
    base = v_a if c == "A" else v_b
    return -(conj_action(c) @ base)


def cocycle_of_word(w: Word, v_a=None, v_b=None) -> PolyVector:
    """Translational part of the image of ``w``.

    Uses v(g h) = v(g) + c(g) v(h) letter by letter, with
    v(a^-1) = -c(a^-1) v(a).
    """
    if v_a is None or v_b is None:
        da, db = normal_form_cocycles()
        v_a = da if v_a is None else v_a
        v_b = db if v_b is None else v_b
    v = ZERO_COCYCLE
    conj = None
    for c in w.letters:
        step = _letter_cocycle(c, v_a, v_b)
        v = v + (step if conj is None else conj @ step)
        conj = conj_action(c) if conj is None else conj @ conj_action(c)
    return v


def _add_term(d, w, k):
    v = d.get(w, 0) + k
    if v:
        d[w] = v
    else:
        d.pop(w, None)


def fox_derivatives(w: Word):
    """Fox derivatives ``(dw/da, dw/db)`` as dicts Word -> integer coefficient.

    For w = l1 ... ln, d/dg sums the prefixes l1 ... l(k-1) over letters
    lk = g and subtracts the prefixes l1 ... lk over letters lk = g^-1.
    """
    da, db = {}, {}
    letters = w.letters
    for k, c in enumerate(letters):
        target = da if c in "aA" else db
        if c.islower():
            _add_term(target, Word(letters[:k]), 1)
        else:
            _add_term(target, Word(letters[:k + 1]), -1)
    return da, db


def apply_fox(derivs, v_a, v_b):
    """Evaluate sum_w c_w c(w) v_a + sum_w c_w c(w) v_b."""
    da, db = derivs
    v = ZERO_COCYCLE
    for d, base in ((da, v_a), (db, v_b)):
        for w, k in d.items():
            v = v + (eval_conj(w) @ base).scale(k)
    return v


@dataclass(frozen=True)
class AffineIdeal:
    p_gens: Ideal
    q_gens: Ideal
    combined: Ideal
    cocycle: PolyVector

    def to_json(self):
        return {"p": self.p_gens.to_json(), "q": self.q_gens.to_json(), "groebner": self.combined.to_json()}


def affine_ideal(p, minus_sign=False) -> AffineIdeal:
    """Ideal of affine c-representations in Z[x, y, s].

    Parameters
    ----------
    p : Presentation or str
    minus_sign : bool
        Use v_b = s B- - (A-B-)- instead of s B- + (A-B-)-.
    """
    if isinstance(p, str):
        p = parse_presentation(p)
    v_a, v_b = normal_form_cocycles(minus_sign)
    w1, w2 = p.sides()
    diff = cocycle_of_word(w1, v_a, v_b) - cocycle_of_word(w2, v_a, v_b)
    q = Ideal.from_polys(diff)
    p_gens = c_ideal(p).simplified
    combined = groebner(Ideal.from_polys(list(p_gens) + list(q)), "grlex")
    return AffineIdeal(p_gens, q, combined, diff)


def same_affine_ideal(aff: AffineIdeal, q_polys) -> bool:
    """Whether <p, q_polys> equals the computed ideal <p, q>."""
    other = groebner(Ideal.from_polys(list(aff.p_gens) + list(q_polys)), "grlex")
    return other.generators == aff.combined.generators


# numeric affine elements

def pure_xyz(q: NumQuaternion):
    """Coordinates (X, Y, Z) of the pure part Z i + Y j - X ij."""
    _, b, c, d = q.comps
    return np.array([-d, c, b])


@dataclass(frozen=True)
class AffineElement:
    """Isometry z -> A z A^-1 + v, with v in (X, Y, Z) coordinates."""

    v: np.ndarray
    A: NumQuaternion

    def linear(self):
        return rotation_matrix(self.A.params, *self.A.comps)

    def __mul__(self, other):
        return AffineElement(self.v + self.linear() @ other.v, self.A * other.A)

    def inverse(self):
        Ai = self.A.inverse()
        return AffineElement(-(rotation_matrix(Ai.params, *Ai.comps) @ self.v), Ai)

    def apply(self, z):
        return self.linear() @ np.asarray(z) + self.v


class _NoAxis:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NoAxis"

    def __bool__(self):
        return False


NoAxis = _NoAxis()


@dataclass(frozen=True)
class AxisShift:
    vector_shift: np.ndarray | None
    v_perp: np.ndarray
    axis_point: object


def axis_shift(e: AffineElement, tol=1e-9) -> AxisShift:
    """Split the translation along the axis direction A- and locate the axis.

    The vector shift is the component of v along A- for the norm form; the
    axis point u solves (Id - c(A)) u = v_perp within the orthogonal
    complement of A-.  Parabolic linear parts (A- null, or a singular
    restricted system) have no axis and give ``NoAxis``.

    Raises
    ------
    ZeroAxisDirection
        When A- vanishes within ``tol``.
    """
    a = pure_xyz(e.A).astype(float) if e.A.field == "real" else pure_xyz(e.A)
    v = np.asarray(e.v)
    if np.max(np.abs(a)) < tol:
        raise ZeroAxisDirection("pure part of the linear part is zero")
    eta = e.A.params.eta()
    aa = a @ eta @ a
    if abs(aa) < tol * float(np.max(np.abs(a))) ** 2:
        return AxisShift(None, v, NoAxis)
    shift = (v @ eta @ a) / aa * a
    v_perp = v - shift
    # basis of the eta-orthogonal complement of a
    _, _, vh = np.linalg.svd((eta @ a)[None, :])
    E = vh[1:].T
    K = (np.eye(3) - e.linear()) @ E
    sv = np.linalg.svd(K, compute_uv=False)
    if sv[-1] < tol * max(sv[0], 1.0):
        return AxisShift(shift, v_perp, NoAxis)
    c, *_ = np.linalg.lstsq(K, v_perp, rcond=None)
    return AxisShift(shift, v_perp, E @ c)
