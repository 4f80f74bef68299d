"""
Affine c-representations
========================

Translational parts form a cocycle.  Normalising v_a = s A- and
v_b = s B- + (A-B-)- the relation adds conditions in x, y and s.
"""

import numpy as np

from quatrep import affine_ideal, two_bridge
from quatrep.affine import AffineElement, axis_shift, fox_derivatives, pure_xyz
from quatrep.classify import Region, construct_pair
from quatrep.presentation import parse_word

for name, pres in (("trefoil", two_bridge(3, 1)), ("figure-eight", two_bridge(5, 3))):
    aff = affine_ideal(pres)
    print(name)
    print("  p =", aff.p_gens)
    print("  groebner =", aff.combined)

# Fox derivatives give the same cocycle by a second route
print(fox_derivatives(parse_word("aba")))

# a numeric trefoil representation with 4x^2 + 4sx - 3 = 0
x = 0.4
y = x * x - 0.5
s = (3 - 4 * x * x) / (4 * x)
A, B, _, _ = construct_pair(Region.Case1_S3, x, y)
ea = AffineElement(s * pure_xyz(A), A)
eb = AffineElement(s * pure_xyz(B) + pure_xyz((A.minus * B.minus).minus), B)
print("aba - bab translation:", (ea * eb * ea).v - (eb * ea * eb).v)

# the image of a is a screw motion: shift along A- plus a rotation about an axis
res = axis_shift(ea)
print("vector shift", res.vector_shift, "axis point", np.round(res.axis_point, 12))
