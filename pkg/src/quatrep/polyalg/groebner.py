"""Ideals over Q[x, y, s] and reduced Gröbner bases (Buchberger)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .poly import ORDERS, Poly, content_primitive

# Internally polynomials are dicts exponent -> int, kept primitive.


def _lcm_exp(a, b):
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


def _divides(a, b):
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def _coprime(a, b):
    return not (min(a[0], b[0]) or min(a[1], b[1]) or min(a[2], b[2]))


def _sub_exp(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _prim(d):
    if not d:
        return d
    g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        d = {e: c // g for e, c in d.items()}
    return d


def _axpy(f, a, g, b, shift):
    """Return a*f - b*(x^shift)*g as a new dict."""
    out = {e: a * c for e, c in f.items()} if a != 1 else dict(f)
    s0, s1, s2 = shift
    for (e0, e1, e2), c in g.items():
        e = (e0 + s0, e1 + s1, e2 + s2)
        v = out.get(e, 0) - b * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


class _Basis:
    def __init__(self, key):
        self.key = key
        self.polys = []
        self.lms = []
        self.lcs = []

    def add(self, d):
        lm = max(d, key=self.key)
        self.polys.append(d)
        self.lms.append(lm)
        self.lcs.append(d[lm])
        return len(self.polys) - 1


def _reduce(f, basis, active, key):
    """Fully reduce dict ``f`` by basis elements in ``active``."""
    rem = {}
    f = dict(f)
    while f:
        e = max(f, key=key)
        c = f[e]
        for i in active:
            lm = basis.lms[i]
            if _divides(lm, e):
                lc = basis.lcs[i]
                g = gcd(c, lc)
                a, b = lc // g, c // g
                if a < 0:
                    a, b = -a, -b
                f = _axpy(f, a, basis.polys[i], b, _sub_exp(e, lm))
                if a != 1:
                    rem = {k: a * v for k, v in rem.items()}
                break
        else:
            rem[e] = c
            del f[e]
    return _prim(rem)


def _spoly(basis, i, j):
    lmi, lmj = basis.lms[i], basis.lms[j]
    L = _lcm_exp(lmi, lmj)
    ci, cj = basis.lcs[i], basis.lcs[j]
    g = gcd(ci, cj)
    a, b = cj // g, ci // g
    fi = basis.polys[i]
    shifted = {}
    si = _sub_exp(L, lmi)
    for (e0, e1, e2), c in fi.items():
        shifted[(e0 + si[0], e1 + si[1], e2 + si[2])] = c
    return _axpy(shifted, a, basis.polys[j], b, _sub_exp(L, lmj))


def _to_dict(p):
    _, prim = content_primitive(p)
    return dict(prim.terms)


def _groebner_dicts(polys, order):
    key = ORDERS[order]
    basis = _Basis(key)
    G = []
    pairs = []

    def update(h):
        nonlocal G, pairs
        lmh = basis.lms[h]
        C = list(G)
        D = []
        while C:
            g1 = C.pop()
            l1 = _lcm_exp(lmh, basis.lms[g1])
            if _coprime(lmh, basis.lms[g1]) or (
                not any(_divides(_lcm_exp(lmh, basis.lms[g2]), l1) for g2 in C)
                and not any(_divides(_lcm_exp(lmh, basis.lms[g2]), l1) for g2 in D)
            ):
                D.append(g1)
        E = [g for g in D if not _coprime(lmh, basis.lms[g])]
        kept = []
        for (g1, g2) in pairs:
            L = _lcm_exp(basis.lms[g1], basis.lms[g2])
            if (
                _divides(lmh, L)
                and _lcm_exp(basis.lms[g1], lmh) != L
                and _lcm_exp(basis.lms[g2], lmh) != L
            ):
                continue
            kept.append((g1, g2))
        pairs = kept + [(g, h) for g in E]
        G = [g for g in G if not _divides(lmh, basis.lms[g])] + [h]

    seeds = sorted((d for d in polys if d), key=lambda d: key(max(d, key=key)))
    for d in seeds:
        r = _reduce(d, basis, G, key)
        if r:
            update(basis.add(r))
    while pairs:
        pairs.sort(key=lambda pr: key(_lcm_exp(basis.lms[pr[0]], basis.lms[pr[1]])))
        i, j = pairs.pop(0)
        s = _spoly(basis, i, j)
        r = _reduce(s, basis, G, key)
        if r:
            update(basis.add(r))
    # minimal basis then full inter-reduction
    G = [g for g in G if not any(h != g and _divides(basis.lms[h], basis.lms[g]) for h in G)]
    out = []
    for g in G:
        others = [h for h in G if h != g]
        r = _reduce(basis.polys[g], basis, others, key)
        out.append(r)
    result = []
    for d in out:
        lm = max(d, key=ORDERS["grlex"])
        if d[lm] < 0:
            d = {e: -c for e, c in d.items()}
        result.append(d)
    result.sort(key=lambda d: key(max(d, key=key)), reverse=True)
    return result


@dataclass(frozen=True)
class Ideal:
    """Ideal of Q[x, y, s] given by primitive, sign-normalized generators.

    ``Ideal(())`` is the zero ideal, whose variety is the whole space.
    """

    generators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    @classmethod
    def from_polys(cls, polys):
        """Drop zeros, take primitive parts and remove duplicates (in order)."""
        seen = []
        for p in polys:
            p = Poly.coerce(p)
            if p.is_zero():
                continue
            prim = content_primitive(p)[1]
            if prim not in seen:
                seen.append(prim)
        return cls(tuple(seen))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return any(not g.variables() for g in self.generators)

    def variables(self):
        vs = set()
        for g in self.generators:
            vs.update(g.variables())
        return tuple(v for v in ("x", "y", "s") if v in vs)

    def to_str(self, spaced=True):
        if not self.generators:
            return "< >"
        return "< " + ", ".join(g.to_str(spaced=spaced) for g in self.generators) + " >"

    def __str__(self):
        return self.to_str()

    def to_json(self):
        return [g.to_json() for g in self.generators]

    @classmethod
    def from_json(cls, data):
        return cls.from_polys(Poly.from_json(d) for d in data)


def groebner(ideal, order="grlex"):
    """Reduced Gröbner basis of ``ideal`` for ``order`` in {"grlex", "lex"}.

    Generators of the result are primitive integer polynomials with positive
    leading coefficient, sorted by decreasing leading monomial; this makes
    the reduced basis a canonical form of the ideal.  The unit ideal is
    returned as ``<1>`` and the zero ideal as ``< >``.
    """
    if not isinstance(ideal, Ideal):
        ideal = Ideal.from_polys(ideal)
    dicts = [_to_dict(g) for g in ideal.generators]
    if not dicts:
        return Ideal(())
    result = _groebner_dicts(dicts, order)
    if any(list(d) == [(0, 0, 0)] for d in result):
        return Ideal((Poly.const(1),))
    return Ideal(tuple(Poly(d) for d in result))


def reduce_poly(p, basis, order="grlex"):
    """Normal form of ``p`` modulo a Gröbner basis, up to a nonzero constant.

    Only the vanishing of the result is meaningful.
    """
    key = ORDERS[order]
    p = Poly.coerce(p)
    if p.is_zero():
        return p
    b = _Basis(key)
    for g in basis:
        b.add(_to_dict(g))
    return Poly(_reduce(_to_dict(p), b, range(len(b.polys)), key))


def ideal_equal(a, b, order="grlex"):
    return groebner(a, order).generators == groebner(b, order).generators


def ideal_contains(ideal, p, order="grlex"):
    gb = groebner(ideal, order)
    return reduce_poly(p, gb.generators, order).is_zero()
