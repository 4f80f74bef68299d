"""Sparse polynomials in x, y, s with exact coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from ..errors import MissingVariable, ZeroPolynomial

VARS = ("x", "y", "s")
_INDEX = {v: i for i, v in enumerate(VARS)}


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def grlex_key(e):
    """Graded-lex key with s > y > x."""
    return (e[0] + e[1] + e[2], e[2], e[1], e[0])


def lex_key(e):
    """Lex key with s > y > x."""
    return (e[2], e[1], e[0])


ORDERS = {"grlex": grlex_key, "lex": lex_key}


class Poly:
    """Polynomial as a map ``(ex, ey, es) -> coefficient``.

    Coefficients are ``int`` (or ``Fraction`` where division was needed);
    zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in dict(terms).items():
                e = tuple(int(k) for k in e)
                if len(e) != 3 or min(e) < 0:
                    raise ValueError(f"bad exponent {e}")
                c = _norm(c)
                if c:
                    t[e] = c
        self.terms = t
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name, power=1):
        e = [0, 0, 0]
        e[_INDEX[name]] = power
        return cls({tuple(e): 1})

    @classmethod
    def coerce(cls, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.const(other)
        if isinstance(other, str):
            return parse_poly(other)
        return NotImplemented

    # ring operations

    def __add__(self, other):
        other = Poly.coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = _norm(v)
            else:
                t.pop(e, None)
        return Poly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = Poly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = Poly.coerce(other)
        if other is NotImplemented:
            return other
        t = {}
        for (a0, a1, a2), c in self.terms.items():
            for (b0, b1, b2), d in other.terms.items():
                e = (a0 + b0, a1 + b1, a2 + b2)
                t[e] = t.get(e, 0) + c * d
        return Poly._raw({e: _norm(c) for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        if not c:
            return Poly._raw({})
        return Poly._raw({e: _norm(v * c) for e, v in self.terms.items()})

    def mul_term(self, e, c):
        a0, a1, a2 = e
        return Poly._raw({(b0 + a0, b1 + a1, b2 + a2): _norm(v * c) for (b0, b1, b2), v in self.terms.items()})

    # comparison and hashing

    def __eq__(self, other):
        other = Poly.coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # structure

    def leading(self, order="grlex"):
        """Return ``(exponent, coefficient)`` of the leading term."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        e = max(self.terms, key=ORDERS[order])
        return e, self.terms[e]

    def sorted_terms(self, order="grlex"):
        return sorted(self.terms.items(), key=lambda t: ORDERS[order](t[0]), reverse=True)

    def degree(self, var=None):
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = _INDEX[var]
        return max(e[i] for e in self.terms)

    def variables(self):
        return tuple(v for i, v in enumerate(VARS) if any(e[i] for e in self.terms))

    def is_integral(self):
        return all(isinstance(c, int) for c in self.terms.values())

    def derivative(self, var):
        i = _INDEX[var]
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                t[tuple(f)] = c * e[i]
        return Poly._raw(t)

    def substitute(self, values):
        """Substitute exact values for some variables, returning a Poly."""
        idx = {_INDEX[k]: Fraction(v) for k, v in values.items()}
        acc = {}
        for e, c in self.terms.items():
            f = list(e)
            for i, v in idx.items():
                if f[i]:
                    c = c * v ** f[i]
                    f[i] = 0
            f = tuple(f)
            acc[f] = acc.get(f, 0) + c
        return Poly(acc)

    def univariate_coeffs(self, var):
        """Coefficients ``[c0, c1, ...]`` of a polynomial in ``var`` alone."""
        others = [v for v in self.variables() if v != var]
        if others:
            raise ValueError(f"polynomial is not univariate in {var}: involves {others}")
        i = _INDEX[var]
        coeffs = [0] * (self.degree(var) + 1 if self.terms else 0)
        for e, c in self.terms.items():
            coeffs[e[i]] = c
        return coeffs

    def __call__(self, **pt):
        return evaluate(self, pt)

    # printing

    def to_str(self, order="grlex", spaced=False, names=None):
        """Human format such as ``4*x^2+4*s*x-3``."""
        if not self.terms:
            return "0"
        names = names or {}
        parts = []
        for e, c in self.sorted_terms(order):
            mono = []
            for v in ("s", "x", "y"):
                k = e[_INDEX[v]]
                if k:
                    n = names.get(v, v)
                    mono.append(n if k == 1 else f"{n}^{k}")
            a = abs(c)
            coef = str(a)
            if mono:
                body = "*".join(mono) if a == 1 else (f"({coef})*" if isinstance(a, Fraction) else f"{coef}*") + "*".join(mono)
            else:
                body = f"({coef})" if isinstance(a, Fraction) and parts else coef
            parts.append(("-" if c < 0 else "+", body))
        sep = " " if spaced else ""
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f"{sep}{sign}{sep}{body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.to_str()!r})"

    def to_json(self):
        return [{"e": list(e), "c": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data):
        return cls({tuple(t["e"]): Fraction(t["c"]) for t in data})


X = Poly.var("x")
Y = Poly.var("y")
S = Poly.var("s")
ONE = Poly.const(1)
ZERO = Poly()


def add(p, q):
    return Poly.coerce(p) + Poly.coerce(q)


def mul(p, q):
    return Poly.coerce(p) * Poly.coerce(q)


def neg(p):
    return -Poly.coerce(p)


def scale(p, c):
    return Poly.coerce(p).scale(c)


def _horner(coeffs, v):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * v + c
    return acc


def evaluate(p, pt):
    """Evaluate ``p`` at a point given as a mapping variable -> value.

    Exact for ``int``/``Fraction`` values; otherwise nested Horner evaluation
    in the value type (float or complex).

    Raises
    ------
    MissingVariable
        If a variable of ``p`` is absent from ``pt``.
    """
    p = Poly.coerce(p)
    for v in p.variables():
        if v not in pt:
            raise MissingVariable(f"variable {v!r} missing from evaluation point")
    exact = all(isinstance(pt[v], (int, Fraction)) for v in p.variables())
    if exact:
        total = Fraction(0)
        vals = [Fraction(pt.get(v, 0)) for v in VARS]
        for e, c in p.terms.items():
            term = Fraction(c)
            for k, val in zip(e, vals):
                if k:
                    term *= val ** k
            total += term
        return _norm(total)
    # s outermost, then y, then Horner in x
    xv, yv, sv = (pt.get(v, 0) for v in VARS)
    nested = {}
    for (ex, ey, es), c in p.terms.items():
        row = nested.setdefault(es, {}).setdefault(ey, {})
        row[ex] = c
    def hx(d):
        coeffs = [0] * (max(d) + 1)
        for k, c in d.items():
            coeffs[k] = float(c)
        return _horner(coeffs, xv)
    def hy(d):
        coeffs = [0.0] * (max(d) + 1)
        for k, sub in d.items():
            coeffs[k] = hx(sub)
        return _horner(coeffs, yv)
    if not nested:
        return 0.0
    coeffs = [0.0] * (max(nested) + 1)
    for k, sub in nested.items():
        coeffs[k] = hy(sub)
    return _horner(coeffs, sv)


def content_primitive(p):
    """Split ``p`` as ``content * primitive``.

    The primitive part has coprime integer coefficients and a positive
    graded-lex leading coefficient; the content carries the sign.

    >>> content_primitive(parse_poly("-2*x+2"))
    (-2, Poly('x-1'))
    """
    p = Poly.coerce(p)
    if not p.terms:
        raise ZeroPolynomial("content of the zero polynomial is undefined")
    coeffs = [Fraction(c) for c in p.terms.values()]
    den = reduce(lcm, (c.denominator for c in coeffs), 1)
    num = reduce(gcd, (int(c * den) for c in coeffs), 0)
    content = Fraction(num, den)
    if p.leading()[1] < 0:
        content = -content
    prim = Poly._raw({e: int(Fraction(c) / content) for e, c in p.terms.items()})
    return _norm(content), prim


def primitive(p):
    return content_primitive(p)[1]


# parsing of the human format

_TOK = re.compile(r"\s*(?:(\d+)|([xys])|(\*\*|[-+*/^()]))")


def parse_poly(text):
    """Parse text such as ``"4*x^2 + 4*s*x - 3"`` or ``"(1-x^2)^2 - y^2"``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOK.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        num, name, op = m.groups()
        tokens.append(("n", int(num)) if num else ("v", name) if name else ("o", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        i += 1
        return tokens[i - 1]

    def expr():
        if peek() == ("o", "-"):
            take()
            acc = -term()
        else:
            if peek() == ("o", "+"):
                take()
            acc = term()
        while peek() in (("o", "+"), ("o", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = factor()
        while peek() in (("o", "*"), ("o", "/")):
            op = take()[1]
            f = factor()
            if op == "*":
                acc = acc * f
            else:
                if f.variables() or not f.terms:
                    raise ValueError("division only by nonzero constants")
                acc = acc.scale(Fraction(1) / Fraction(f.terms[(0, 0, 0)]))
        return acc

    def factor():
        if peek() == ("o", "-"):
            take()
            return -factor()
        base = atom()
        if peek() == ("o", "^"):
            take()
            kind, val = take()
            if kind != "n":
                raise ValueError("exponent must be a non-negative integer")
            base = base ** val
        return base

    def atom():
        kind, val = take()
        if kind == "n":
            return Poly.const(val)
        if kind == "v":
            return Poly.var(val)
        if (kind, val) == ("o", "("):
            e = expr()
            if take() != ("o", ")"):
                raise ValueError("unbalanced parentheses")
            return e
        raise ValueError(f"unexpected token {val!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return result
