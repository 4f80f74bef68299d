"""Explicit representations at real points of the variety.

A real point (x0, y0) determines, up to conjugation, a pair of unit
quaternions (A, B) with A+ = B+ = x0 and -(A-B-)+ = y0.  The pair lives in
the Hamilton quaternions (S^3 = SU(2)) when 1 - x0^2 > 0 and
(1 - x0^2)^2 > y0^2, and in the split algebra M(2, R) (SL(2, R)) in the
remaining real cases; on the boundary (1 - x0^2)^2 = y0^2 with
1 - x0^2 > 0 only a complex pair exists.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from dataclasses import field as dc_field
from enum import Enum

import numpy as np

from .errors import DegeneratePoint, DomainError, UnsupportedAlgebra
from .presentation import Presentation, parse_presentation
from .quatsym import HAMILTON, SPLIT, AlgebraParams, norm_form, rotation_matrix

BOUNDARY_TOL = 1e-9
VERIFY_TOL = 1e-9


class Region(Enum):
    """Cases of the real-point dispatch; ``value`` is the short label."""

    Case1_S3 = "1"
    Boundary_AlmostIrreducible_Complex = "1b"
    Case2_1_SL2R = "2.1"
    Case2_2_1_SL2R = "2.2.1"
    Case2_2_2_SL2R = "2.2.2"
    Case2_3_SL2R = "2.3"
    Case2_4_AlmostIrr_SL2R = "2.4"
    Case2_5_Parabolic_SL2R = "2.5"
    Degenerate_x2_1_y0 = "degenerate"

    @property
    def label(self):
        return self.value

    @property
    def expected_reducibility(self):
        if self is Region.Degenerate_x2_1_y0:
            return "none"
        if self in (Region.Case2_4_AlmostIrr_SL2R, Region.Boundary_AlmostIrreducible_Complex):
            return "almost_irreducible"
        return "irreducible"

    @property
    def is_boundary(self):
        return self in (
            Region.Boundary_AlmostIrreducible_Complex,
            Region.Case2_4_AlmostIrr_SL2R,
            Region.Case2_5_Parabolic_SL2R,
            Region.Degenerate_x2_1_y0,
        )

    @classmethod
    def from_label(cls, text):
        for r in cls:
            if text in (r.value, r.name):
                return r
        raise ValueError(f"unknown region {text!r}")


class NumQuaternion:
    """Numeric quaternion alpha + beta i + gamma j + delta ij of (mu, nu / k).

    ``field`` is ``"real"`` or ``"complex"``.
    """

    __slots__ = ("comps", "params", "field")

    def __init__(self, alpha, beta=0, gamma=0, delta=0, params=HAMILTON, field=None):
        comps = (alpha, beta, gamma, delta)
        is_complex = any(isinstance(c, complex) and c.imag != 0 for c in comps)
        if field is None:
            field = "complex" if is_complex else "real"
        if field == "real":
            if is_complex:
                raise ValueError("complex component in a real quaternion")
            comps = tuple(float(c.real if isinstance(c, complex) else c) for c in comps)
        else:
            comps = tuple(complex(c) for c in comps)
        if not all(cmath.isfinite(c) for c in comps):
            raise ValueError("quaternion components must be finite")
        self.comps = comps
        self.params = params
        self.field = field

    @classmethod
    def from_array(cls, arr, params, field=None):
        return cls(*[complex(v) if np.iscomplexobj(arr) else float(v) for v in arr], params=params, field=field)

    def _new(self, comps, other=None):
        field = "complex" if self.field == "complex" or (other is not None and other.field == "complex") else "real"
        return NumQuaternion(*comps, params=self.params, field=field)

    def _check(self, other):
        if self.params != other.params:
            raise UnsupportedAlgebra("quaternions belong to different algebras")

    @property
    def alpha(self):
        return self.comps[0]

    @property
    def plus(self):
        """Scalar part (half the trace)."""
        return self.comps[0]

    @property
    def minus(self):
        """Pure part as a quaternion."""
        return self._new((0, *self.comps[1:]))

    def pure_vector(self):
        return np.array(self.comps[1:])

    def array(self):
        return np.array(self.comps)

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            return self._new((self.comps[0] + other, *self.comps[1:]))
        self._check(other)
        return self._new(tuple(a + b for a, b in zip(self.comps, other.comps)), other)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._new(tuple(-a for a in self.comps))

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self._new(tuple(a * other for a in self.comps))
        self._check(other)
        mu, nu = (float(v) for v in self.params.as_tuple())
        a1, b1, c1, d1 = self.comps
        a2, b2, c2, d2 = other.comps
        return self._new((
            a1 * a2 + mu * b1 * b2 + nu * c1 * c2 - mu * nu * d1 * d2,
            a1 * b2 + b1 * a2 - nu * c1 * d2 + nu * d1 * c2,
            a1 * c2 + c1 * a2 + mu * b1 * d2 - mu * d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
        ), other)

    def __rmul__(self, other):
        return self * other

    def conjugate(self):
        a, b, c, d = self.comps
        return self._new((a, -b, -c, -d))

    def norm(self):
        mu, nu = (float(v) for v in self.params.as_tuple())
        return norm_form(*self.comps, mu, nu)

    def trace(self):
        return 2 * self.comps[0]

    def inverse(self):
        n = self.norm()
        if abs(n) == 0:
            raise ZeroDivisionError("quaternion of norm zero")
        return self.conjugate() * (1 / n)

    def max_abs_diff(self, other):
        return max(abs(a - b) for a, b in zip(self.comps, other.comps))

    def __repr__(self):
        mu, nu = self.params.as_tuple()
        return f"NumQuaternion({', '.join(repr(c) for c in self.comps)}; mu={mu}, nu={nu}, {self.field})"


# region dispatch

def classify_point(x0, y0, tol=BOUNDARY_TOL) -> Region:
    """Region of (x0, y0) from the signs of 1 - x0^2, (1 - x0^2)^2 - y0^2 and y0.

    Values within ``tol`` of zero are treated as zero, so boundary points
    snap to the boundary case.
    """
    x0, y0 = float(x0), float(y0)
    u = 1 - x0 * x0
    d = u * u - y0 * y0
    if abs(u) <= tol:
        return Region.Degenerate_x2_1_y0 if abs(y0) <= tol else Region.Case2_5_Parabolic_SL2R
    if u > 0:
        if d > tol:
            return Region.Case1_S3
        if d >= -tol:
            return Region.Boundary_AlmostIrreducible_Complex
        return Region.Case2_1_SL2R
    if d > tol:
        return Region.Case2_3_SL2R
    if d >= -tol:
        return Region.Case2_4_AlmostIrr_SL2R
    return Region.Case2_2_1_SL2R if y0 < 0 else Region.Case2_2_2_SL2R


FIELDS = {
    Region.Case1_S3: "Q(x,y,sqrt(1-x^2),sqrt((1-x^2)^2-y^2))",
    Region.Boundary_AlmostIrreducible_Complex: "Q(x,y,sqrt(x^2-1))",
    Region.Case2_1_SL2R: "Q(x,y,sqrt(1-x^2),sqrt(y^2-(1-x^2)^2))",
    Region.Case2_2_1_SL2R: "Q(x,y,sqrt(x^2-1),sqrt(y^2-(x^2-1)^2))",
    Region.Case2_2_2_SL2R: "Q(x,y,sqrt(x^2-1),sqrt(y^2-(x^2-1)^2))",
    Region.Case2_3_SL2R: "Q(x,y,sqrt(x^2-1),sqrt((x^2-1)^2-y^2))",
    Region.Case2_4_AlmostIrr_SL2R: "Q(x,y,sqrt(x^2-1))",
    Region.Case2_5_Parabolic_SL2R: "Q(y)",
}


def _sqrt(v, what, tol):
    # positive root; tiny negative radicands from rounding are clamped
    if v < 0:
        if v < -tol:
            raise DomainError(f"negative radicand {v} for {what}")
        return 0.0
    return math.sqrt(v)


def construct_pair(region, x0, y0, tol=BOUNDARY_TOL):
    """Normal-form pair (A, B) for a classified point.

    Returns
    -------
    A, B : NumQuaternion
    params : AlgebraParams
        (-1, -1) for the S^3 case, (-1, 1) otherwise.
    field : str
        Name of the smallest field containing the entries.

    Raises
    ------
    DegeneratePoint
        For the excluded points (+-1, 0).
    DomainError
        If a radicand is negative beyond ``tol`` (point misclassified).
    """
    x, y = float(x0), float(y0)
    u = 1 - x * x
    R = Region
    if region is R.Degenerate_x2_1_y0:
        raise DegeneratePoint(f"({x}, {y}) admits no irreducible or almost-irreducible pair")
    if region is R.Case1_S3:
        ru = _sqrt(u, "1-x^2", tol)
        rd = _sqrt(u * u - y * y, "(1-x^2)^2-y^2", tol)
        A = NumQuaternion(x, y / ru, rd / ru, 0, params=HAMILTON)
        B = NumQuaternion(x, ru, 0, 0, params=HAMILTON)
        return A, B, HAMILTON, FIELDS[region]
    if region is R.Boundary_AlmostIrreducible_Complex:
        g = cmath.sqrt(x * x - 1)
        den = 2 * x * x - 2
        A = NumQuaternion(x, 0, 0, g, params=SPLIT, field="complex")
        B = NumQuaternion(
            x,
            (2 - 3 * x * x + x ** 4 - y * y) / den,
            (-x * x + x ** 4 - y * y) / den,
            -y / g,
            params=SPLIT,
            field="complex",
        )
        return A, B, SPLIT, FIELDS[region]
    if region is R.Case2_1_SL2R:
        ru = _sqrt(u, "1-x^2", tol)
        rd = _sqrt(y * y - u * u, "y^2-(1-x^2)^2", tol)
        A = NumQuaternion(x, ru, 0, 0, params=SPLIT)
        B = NumQuaternion(x, y / ru, rd / ru, 0, params=SPLIT)
        return A, B, SPLIT, FIELDS[region]
    if region is R.Case2_5_Parabolic_SL2R:
        A = NumQuaternion(x, 1, 1, 0, params=SPLIT)
        B = NumQuaternion(x, y / 2, -y / 2, 0, params=SPLIT)
        return A, B, SPLIT, FIELDS[region]
    g = _sqrt(-u, "x^2-1", tol)
    g2 = g * g
    A = NumQuaternion(x, 0, g, 0, params=SPLIT)
    if region in (R.Case2_2_1_SL2R, R.Case2_2_2_SL2R):
        r = _sqrt(y * y - g2 * g2, "y^2-(x^2-1)^2", tol) / g
        if region is R.Case2_2_2_SL2R:
            r = -r
        B = NumQuaternion(x, r, -y / g, 0, params=SPLIT)
    elif region is R.Case2_3_SL2R:
        r = _sqrt(g2 * g2 - y * y, "(x^2-1)^2-y^2", tol) / g
        B = NumQuaternion(x, 0, -y / g, r, params=SPLIT)
    elif region is R.Case2_4_AlmostIrr_SL2R:
        B = NumQuaternion(x, 1, -y / g, 1, params=SPLIT)
    else:
        raise ValueError(f"unknown region {region!r}")
    return A, B, SPLIT, FIELDS[region]


def embed_2x2(q: NumQuaternion) -> np.ndarray:
    """2x2 matrix of a quaternion of (-1, 1) or (-1, -1); the determinant is N(q)."""
    a, b, c, d = q.comps
    mu, nu = q.params.as_tuple()
    if (mu, nu) == (-1, 1):
        m = [[a + d, b + c], [-b + c, a - d]]
        return np.array(m, dtype=complex if q.field == "complex" else float)
    if (mu, nu) == (-1, -1):
        return np.array([[a - d * 1j, -b + c * 1j], [b + c * 1j, a + d * 1j]], dtype=complex)
    raise UnsupportedAlgebra(f"no 2x2 embedding for algebra ({mu}, {nu})")


def so_matrix(q: NumQuaternion, tol=1e-9):
    m = rotation_matrix(q.params, *q.comps, tol=tol)
    return m


@dataclass(frozen=True)
class Invariant:
    kind: str
    value: float


def geometric_invariant(region, x0, y0, tol=1e-9):
    """Angle or distance between the axes of A and B.

    ``cos_omega`` for the S^3 case, ``cosh_d`` for cases 2.1 and 2.2,
    ``cos_theta`` for case 2.3 and ``None`` otherwise.
    """
    x, y = float(x0), float(y0)
    u = 1 - x * x
    R = Region
    if region is R.Case1_S3:
        inv = Invariant("cos_omega", y / u)
    elif region is R.Case2_1_SL2R:
        inv = Invariant("cosh_d", abs(y) / u)
    elif region in (R.Case2_2_1_SL2R, R.Case2_2_2_SL2R):
        inv = Invariant("cosh_d", abs(y) / (x * x - 1))
    elif region is R.Case2_3_SL2R:
        inv = Invariant("cos_theta", -y / (x * x - 1))
    else:
        return None
    if inv.kind.startswith("cos_") and abs(inv.value) > 1 + tol:
        raise DomainError(f"{inv.kind} = {inv.value} outside [-1, 1]")
    if inv.kind == "cosh_d" and inv.value < 1 - tol:
        raise DomainError(f"cosh d = {inv.value} < 1")
    return inv


def eval_word_numeric(w, A, B):
    images = {"a": A, "b": B, "A": A.inverse(), "B": B.inverse()}
    acc = NumQuaternion(1, 0, 0, 0, params=A.params, field=A.field)
    for c in w.letters:
        acc = acc * images[c]
    return acc


def relator_residual(A, B, presentation):
    """Max-abs component of w1(A, B) - w2(A, B)."""
    if isinstance(presentation, str):
        presentation = parse_presentation(presentation)
    w1, w2 = presentation.sides()
    return float(eval_word_numeric(w1, A, B).max_abs_diff(eval_word_numeric(w2, A, B)))


def verify_relator(pair, presentation, tol=VERIFY_TOL):
    """Return ``(residual, ok)`` for a numeric pair and a presentation."""
    A, B = pair[0], pair[1]
    r = relator_residual(A, B, presentation)
    return r, r < tol


def pure_coordinates(A, B):
    """Rows: (i, j, ij)-components of A-, B- and (A-B-)-."""
    am, bm = A.minus, B.minus
    ab = (am * bm).minus
    return np.array([am.comps[1:], bm.comps[1:], ab.comps[1:]])


def coordinate_determinant(A, B):
    return complex(np.linalg.det(pure_coordinates(A, B)))


def _rank(m, tol):
    s = np.linalg.svd(m, compute_uv=False)
    scale = max(1.0, float(s[0])) if len(s) else 1.0
    return int(np.sum(s > tol * scale))


def irreducibility_test(A, B, tol=1e-9):
    """``"irreducible"``, ``"almost_irreducible"`` or ``"reducible"``.

    Irreducible means {1, A-, B-, (A-B-)-} is a basis; almost irreducible
    means only A- and B- are independent.
    """
    m = pure_coordinates(A, B)
    if _rank(m, tol) == 3:
        return "irreducible"
    if _rank(m[:2], tol) == 2:
        return "almost_irreducible"
    return "reducible"


@dataclass
class ClassifiedPoint:
    x: float
    y: float
    region: Region
    A: NumQuaternion | None = None
    B: NumQuaternion | None = None
    params: AlgebraParams | None = None
    field: str | None = None
    invariant: Invariant | None = None
    reducibility: str = "none"
    residual: float | None = None
    notes: list = dc_field(default_factory=list)

    @property
    def pair(self):
        return (self.A, self.B)

    def mat2(self):
        if self.A is None:
            return None
        return embed_2x2(self.A), embed_2x2(self.B)

    def mat3(self):
        if self.A is None:
            return None
        return so_matrix_pair(self)

    def to_json(self):
        def num(v):
            v = complex(v)
            return [v.real, v.imag] if v.imag != 0 else v.real

        def mat(m):
            return [[num(e) for e in row] for row in m]

        d = {"x": self.x, "y": self.y, "region": self.region.value}
        if self.A is None:
            d.update(algebra=None, A=None, B=None, mat2=None, mat3=None, field=None)
        else:
            m2, m3 = self.mat2(), self.mat3()
            d.update(
                algebra=[int(v) for v in self.params.as_tuple()],
                A=[num(c) for c in self.A.comps],
                B=[num(c) for c in self.B.comps],
                mat2={"A": mat(m2[0]), "B": mat(m2[1])},
                mat3={"A": mat(m3[0]), "B": mat(m3[1])},
                field=self.field,
            )
        d["invariant"] = None if self.invariant is None else {"kind": self.invariant.kind, "value": self.invariant.value}
        d["reducibility"] = self.reducibility
        d["residual"] = self.residual
        return d


def so_matrix_pair(cp):
    """Matrices of the conjugation actions of A and B on pure quaternions."""
    return so_matrix(cp.A), so_matrix(cp.B)


def classify(x0, y0, presentation: Presentation | str | None = None,
             tol=VERIFY_TOL, boundary_tol=BOUNDARY_TOL) -> ClassifiedPoint:
    """Classify a real point and build its representation.

    The degenerate points (+-1, 0) give a ClassifiedPoint without a pair.
    When a presentation is supplied the relator residual is recorded.
    """
    region = classify_point(x0, y0, boundary_tol)
    cp = ClassifiedPoint(float(x0), float(y0), region)
    if region is Region.Degenerate_x2_1_y0:
        cp.notes.append("no irreducible or almost-irreducible representation")
        return cp
    A, B, params, fld = construct_pair(region, x0, y0, tol=max(boundary_tol, 1e-12) * 10)
    cp.A, cp.B, cp.params, cp.field = A, B, params, fld
    cp.invariant = geometric_invariant(region, x0, y0, tol=max(tol, boundary_tol) * 10)
    cp.reducibility = irreducibility_test(A, B, tol=max(tol, 1e-12))
    if region is Region.Boundary_AlmostIrreducible_Complex:
        cp.notes.append("complex pair; no real almost-irreducible representation exists")
    if presentation is not None:
        cp.residual = relator_residual(A, B, presentation)
    return cp
