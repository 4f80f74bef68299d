"""
Unit quaternions acting on pure quaternions
===========================================

Conjugation by a unit quaternion preserves the norm form on pure
quaternions.  In (-1,-1) this is a rotation of R^3, in (-1,1) an
isometry of Minkowski space E^{1,2}.
"""

import math

import numpy as np

from quatrep.quatsym import HAMILTON, SPLIT, rotation_matrix

np.set_printoptions(precision=6, suppress=True)

theta = 0.7
print("rotation by theta:")
print(rotation_matrix(HAMILTON, math.cos(theta / 2), math.sin(theta / 2), 0, 0))

d = 0.7
print("hyperbolic translation by d:")
m = rotation_matrix(SPLIT, math.cosh(d / 2), 0, math.sinh(d / 2), 0)
print(m)

print("parabolic 1 + I + J:")
m = rotation_matrix(SPLIT, 1, 1, 1, 0)
print(m)
eta = SPLIT.eta()
print("preserves eta:", np.allclose(m.T @ eta @ m, eta))
print("eigenvalues:", np.round(np.linalg.eigvals(m), 6))
