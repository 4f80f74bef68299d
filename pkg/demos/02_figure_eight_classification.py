"""
Classifying real points of the figure-eight variety
===================================================

Every real point (x, y) of the variety is turned into an explicit pair of
unit quaternions, in S^3 or SL(2,R) (or SL(2,C) on a boundary).
"""

import math

import numpy as np

from quatrep import c_ideal, classify, two_bridge
from quatrep.numerics import solve_branches

np.set_printoptions(precision=6, suppress=True)

pres = two_bridge(5, 3)
print("presentation:", pres)
print("I =", c_ideal(pres).simplified)

# a point with |x| < 1 lies in S^3
for y in solve_branches(c_ideal(pres), 0.2):
    cp = classify(0.2, y, pres)
    print(f"x=0.2 y={y:.6f} region {cp.region.value} {cp.invariant.kind}={cp.invariant.value:.6f}"
          f" residual {cp.residual:.1e}")

# the almost-irreducible point (sqrt(5)/2, -1/4)
x = math.sqrt(5) / 2
cp = classify(x, -0.25, pres)
print("region", cp.region.value, cp.reducibility)
for name, m in zip("AB", cp.mat2()):
    print(f"SL(2,R) image of {name}:")
    print(m)

# beyond the boundary the images are elliptic in SL(2,R)
x = 1.3
for y in solve_branches(c_ideal(pres), x):
    cp = classify(x, y, pres)
    print(f"x={x} y={y:.6f} region {cp.region.value}", cp.invariant)
