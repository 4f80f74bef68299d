"""Exact real root isolation for univariate polynomials (Sturm sequences)."""

from __future__ import annotations

from fractions import Fraction

from ..errors import ZeroPolynomial
from .poly import Poly

DEFAULT_EPS = 1e-12


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _divmod(a, b):
    a = [Fraction(v) for v in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        f = a[-1] / lead
        q[k] = f
        for i, bv in enumerate(b):
            a[i + k] -= f * bv
        a = _trim(a)
    return q, a


def _deriv(c):
    return [i * c[i] for i in range(1, len(c))]


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return [v / a[-1] for v in a]


def square_free(coeffs):
    c = _trim([Fraction(v) for v in coeffs])
    if len(c) <= 2:
        return c
    g = _gcd(c, _deriv(c))
    if len(g) == 1:
        return c
    q, _ = _divmod(c, g)
    return _trim(q)


def sturm_sequence(coeffs):
    seq = [_trim([Fraction(v) for v in coeffs])]
    d = _deriv(seq[0])
    if not _trim(d):
        return seq
    seq.append(_trim(d))
    while True:
        _, r = _divmod(seq[-2], seq[-1])
        if not r:
            return seq
        seq.append([-v for v in r])


def _eval(c, t):
    acc = Fraction(0)
    for v in reversed(c):
        acc = acc * t + v
    return acc


def sign_variations(seq, t):
    signs = [v for v in (_eval(p, t) for p in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(seq, lo, hi):
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def root_bound(coeffs):
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    c = _trim([Fraction(v) for v in coeffs])
    lead = abs(c[-1])
    return 1 + max((abs(v) / lead for v in c[:-1]), default=Fraction(0))


def isolate(coeffs, lo, hi, eps=DEFAULT_EPS):
    """Isolating intervals ``(a, b)`` of width < ``eps`` for roots in [lo, hi].

    An exact root ``r`` is reported as the degenerate interval ``(r, r)``.
    """
    c = square_free(coeffs)
    if not c:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    if len(c) == 1:
        return []
    lo, hi = Fraction(lo), Fraction(hi)
    if len(c) == 2:
        r = -c[0] / c[1]
        return [(r, r)] if lo <= r <= hi else []
    seq = sturm_sequence(c)
    eps = Fraction(eps)
    found = []
    if _eval(c, lo) == 0:
        found.append((lo, lo))
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count_roots(seq, a, b)
        if n == 0:
            continue
        if n == 1:
            found.append(_refine(c, a, b, eps))
            continue
        m = (a + b) / 2
        stack.append((a, m))
        stack.append((m, b))
    found.sort()
    return found


def _refine(c, a, b, eps):
    # exactly one root in (a, b]; exact bisection down to a coarse width,
    # then float bisection, which keeps the root bracketed while the float
    # signs agree with the exact ones at the endpoints
    if _eval(c, b) == 0:
        return (b, b)
    sa = _eval(c, a) > 0
    coarse = max(Fraction(eps), Fraction(1, 2 ** 20))
    while b - a >= coarse:
        m = (a + b) / 2
        v = _eval(c, m)
        if v == 0:
            return (m, m)
        if (v > 0) == sa:
            a = m
        else:
            b = m
    if b - a < eps:
        return (a, b)
    fc = [float(v) for v in c]
    fa, fb = float(a), float(b)
    while fb - fa >= eps:
        m = (fa + fb) / 2
        if m in (fa, fb):
            break
        v = 0.0
        for k in reversed(fc):
            v = v * m + k
        if v == 0:
            if _eval(c, Fraction(m)) == 0:
                return (Fraction(m), Fraction(m))
            break
        if (v > 0) == sa:
            fa = m
        else:
            fb = m
    lo, hi = Fraction(fa), Fraction(fb)
    # confirm the bracket exactly; fall back to exact bisection if rounding misled us
    if (_eval(c, lo) > 0) != sa or (_eval(c, hi) > 0) == sa and _eval(c, hi) != 0:
        lo, hi = a, b
        while hi - lo >= eps:
            m = (lo + hi) / 2
            v = _eval(c, m)
            if v == 0:
                return (m, m)
            if (v > 0) == sa:
                lo = m
            else:
                hi = m
    return (lo, hi)


def univariate_real_roots(p, lo=None, hi=None, eps=DEFAULT_EPS):
    """Isolate every real root of a univariate Poly inside [lo, hi].

    Parameters
    ----------
    p : Poly
        Nonzero polynomial in a single variable (a constant has no roots).
    lo, hi : rational, optional
        Search interval; defaults to a Cauchy root bound.
    eps : float
        Width below which intervals are returned.

    Returns
    -------
    list of (Fraction, Fraction)
        Disjoint intervals, each containing exactly one root, sorted.
    """
    p = Poly.coerce(p)
    if p.is_zero():
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    vs = p.variables()
    if len(vs) > 1:
        raise ValueError(f"expected a univariate polynomial, got variables {vs}")
    if not vs:
        return []
    coeffs = p.univariate_coeffs(vs[0])
    if lo is None or hi is None:
        bound = root_bound(coeffs)
        lo = -bound if lo is None else lo
        hi = bound if hi is None else hi
    return isolate(coeffs, lo, hi, eps)


def root_values(p, lo=None, hi=None, eps=DEFAULT_EPS):
    """Midpoints of the isolating intervals as floats."""
    return [float((a + b) / 2) for a, b in univariate_real_roots(p, lo, hi, eps)]
