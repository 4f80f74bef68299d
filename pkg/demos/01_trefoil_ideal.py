"""
The ideal of c-representations of the trefoil group
===================================================

Write the relation aba = bab, push both sides through the 4x4 matrices of
left multiplication and read off four polynomials in x and y.
"""

from quatrep import c_ideal, parse_presentation, two_bridge
from quatrep.variety import to_trace_coords, trace_str

pres = parse_presentation("aba=bab")
ci = c_ideal(pres)

# the raw vector (w1 - w2) e0 in the basis {1, A-, B-, (A-B-)-}
for k, p in enumerate(ci.raw):
    print(f"entry {k}: {p.to_str(spaced=True)}")

# one generator survives after Groebner reduction
print("I =", ci.simplified)

# in trace coordinates x' = 2x, z = tr(AB) the curve is a line
for g in ci.simplified:
    print("I(x', z) =", trace_str(to_trace_coords(g)))

# the standard 2-bridge presentation gives the same group
assert two_bridge(3, 1).sides() == pres.sides()
