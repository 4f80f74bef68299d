import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import strategies as st

from quatrep.polyalg import Poly
from quatrep.presentation import Word, two_bridge

SX, SY, SS = sp.symbols("x y s")

TREFOIL_P = "2*x^2-2*y-1"
FIG8_P = "1-6*x^2+4*x^4-2*y-4*y^2"
FIG8_Q1 = "5+22*s*x-9*x^2-16*s*x^3+4*x^4+15*y-12*x^2*y"
FIG8_Q2 = "-5-10*s*x+19*x^2-12*x^4-5*y-16*s*x*y+4*x^2*y"
SQRT5_2 = math.sqrt(5) / 2


@pytest.fixture(scope="session")
def trefoil():
    return two_bridge(3, 1)


@pytest.fixture(scope="session")
def fig8():
    return two_bridge(5, 3)


def to_sympy(p: Poly):
    return sp.Add(*[sp.Rational(c) * SX**e[0] * SY**e[1] * SS**e[2] for e, c in p.terms.items()])


def from_sympy(expr):
    poly = sp.Poly(sp.expand(expr), SX, SY, SS)
    return Poly({m: _frac(c) for m, c in poly.terms()})


def _frac(c):
    from fractions import Fraction
    c = sp.Rational(c)
    return Fraction(int(c.p), int(c.q))


def sympy_groebner(polys, order="grlex"):
    """Reduced basis from sympy, as primitive Polys with positive grlex lead."""
    from quatrep.polyalg import content_primitive
    exprs = [to_sympy(p) for p in polys if not p.is_zero()]
    if not exprs:
        return ()
    g = sp.groebner(exprs, SS, SY, SX, order=order)
    out = [content_primitive(from_sympy(e))[1] for e in g.exprs]
    return tuple(out)


small_int = st.integers(min_value=-6, max_value=6)
exponent = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
polys = st.dictionaries(exponent, small_int, max_size=6).map(Poly)
polys_xy = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.just(0)), small_int, max_size=6).map(Poly)
words = st.lists(st.sampled_from("abAB"), max_size=12).map(lambda l: Word(tuple(l)))


def random_unit_quaternion(rng, params):
    """Random unit quaternion of (mu, nu) with mu = -1 (rejection on the norm sign)."""
    mu, nu = params
    while True:
        b, c, d = rng.normal(size=3)
        pure = -(b * b * mu) - c * c * nu + d * d * mu * nu
        # N = a^2 + pure = 1
        a2 = 1 - pure
        if a2 > 0.05:
            a = math.sqrt(a2) * rng.choice([-1, 1])
            return a, b, c, d


def as_array(m):
    return np.array(m, dtype=complex)
