"""Symbolic multiplication in the basis {1, A-, B-, (A-B-)-} over Z[x, y].

For a pair of unit quaternions A, B with A+ = B+ = x and
y = -(A-B-)+, products of basis elements have coordinates that are
polynomials in x, y and u = 1 - x^2.  The matrices below give left
multiplication by each basis element; u is substituted at construction so
every entry lives in Z[x, y].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NotUnitNorm
from .polyalg import ONE, ZERO, Poly, X, Y
from .presentation import Word

U = ONE - X * X


class PolyMatrix:
    """Dense matrix of Poly entries (immutable by convention)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(Poly.coerce(e) for e in row) for row in rows)

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, n=4):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n, m=None):
        return cls([[ZERO] * (m or n) for _ in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        return PolyMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return PolyMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return PolyMatrix([[-a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, PolyVector):
            return PolyVector(_dot(r, other.entries) for r in self.rows)
        cols = list(zip(*other.rows))
        return PolyMatrix([[_dot(r, c) for c in cols] for r in self.rows])

    def scale(self, p):
        p = Poly.coerce(p)
        return PolyMatrix([[a * p for a in r] for r in self.rows])

    def transpose(self):
        return PolyMatrix(list(zip(*self.rows)))

    def column(self, j):
        return PolyVector(r[j] for r in self.rows)

    def block(self, rows, cols):
        return PolyMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def is_zero(self):
        return all(e.is_zero() for r in self.rows for e in r)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def evaluate(self, pt):
        return np.array([[e(**pt) for e in r] for r in self.rows])

    def __repr__(self):
        return "PolyMatrix([" + ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows) + "])"

    def to_json(self):
        return [[e.to_json() for e in r] for r in self.rows]


SymMat4 = PolyMatrix


class PolyVector:
    """Column vector of Poly entries."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(Poly.coerce(e) for e in entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, other):
        return PolyVector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other):
        return PolyVector(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self):
        return PolyVector(-a for a in self.entries)

    def scale(self, p):
        p = Poly.coerce(p)
        return PolyVector(a * p for a in self.entries)

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def __eq__(self, other):
        if isinstance(other, PolyVector):
            return self.entries == other.entries
        return self.entries == tuple(Poly.coerce(e) for e in other)

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "PolyVector([" + ", ".join(str(e) for e in self.entries) + "])"

    def to_json(self):
        return [e.to_json() for e in self.entries]


def _dot(r, c):
    acc = ZERO
    for a, b in zip(r, c):
        if a.terms and b.terms:
            acc = acc + a * b
    return acc


def basis_vector(i, n=4):
    return PolyVector(ONE if k == i else ZERO for k in range(n))


E0 = basis_vector(0)

# left multiplication by the pure basis elements

M_AM = PolyMatrix([
    [0, -U, -Y, 0],
    [1, 0, 0, Y],
    [0, 0, 0, -U],
    [0, 0, 1, 0],
])
M_BM = PolyMatrix([
    [0, -Y, -U, 0],
    [0, 0, 0, U],
    [1, 0, 0, -Y],
    [0, -1, 0, 0],
])
M_ABM = PolyMatrix([
    [0, 0, 0, Y * Y - U * U],
    [0, -Y, -U, 0],
    [0, U, Y, 0],
    [1, 0, 0, 0],
])

I4 = PolyMatrix.identity(4)


def left_mult_basis():
    """Left multiplication matrices ``(mA-, mB-, m(A-B-)-)``."""
    return M_AM, M_BM, M_ABM


def left_mult(coords):
    """Left multiplication by the element with the given basis coordinates."""
    c = [Poly.coerce(v) for v in coords]
    return I4.scale(c[0]) + M_AM.scale(c[1]) + M_BM.scale(c[2]) + M_ABM.scale(c[3])


def right_mult(coords):
    """Right multiplication by ``X``: column j holds the coordinates of basis_j * X."""
    xv = PolyVector(coords)
    cols = [(left_mult(basis_vector(j)) @ xv).entries for j in range(4)]
    return PolyMatrix(list(zip(*cols)))


def right_mult_basis():
    """Right multiplication matrices ``(rA-, rB-, r(A-B-)-)``."""
    return tuple(right_mult(basis_vector(j)) for j in (1, 2, 3))


# coordinates of A, B and their conjugates
COORDS = {
    "a": PolyVector([X, 1, 0, 0]),
    "A": PolyVector([X, -1, 0, 0]),
    "b": PolyVector([X, 0, 1, 0]),
    "B": PolyVector([X, 0, -1, 0]),
}

LETTER_MATRIX = {k: left_mult(v) for k, v in COORDS.items()}
_CONJ_LETTER = {"a": "A", "A": "a", "b": "B", "B": "b"}


def eval_word(w: Word) -> PolyMatrix:
    """Matrix of left multiplication by ``w(A, B)``; inverses use conjugates."""
    m = I4
    for c in w.letters:
        m = m @ LETTER_MATRIX[c]
    return m


_CONJ_CACHE = {}


def conj_action(letter: str) -> PolyMatrix:
    """Matrix of ``Z -> X Z X^-1`` for the image X of a letter (``X^-1`` is the conjugate)."""
    if letter not in _CONJ_CACHE:
        if letter not in COORDS:
            raise ValueError(f"unknown letter {letter!r}")
        _CONJ_CACHE[letter] = LETTER_MATRIX[letter] @ right_mult(COORDS[_CONJ_LETTER[letter]])
    return _CONJ_CACHE[letter]


def eval_conj(w: Word) -> PolyMatrix:
    m = I4
    for c in w.letters:
        m = m @ conj_action(c)
    return m


# Gram matrix of {A-, B-, (A-B-)-} for the norm form
GRAM = PolyMatrix([
    [U, Y, 0],
    [Y, U, 0],
    [0, 0, U * U - Y * Y],
])


@dataclass(frozen=True)
class AlgebraParams:
    """Parameters of the quaternion algebra with i^2 = mu, j^2 = nu."""

    mu: Fraction | int = -1
    nu: Fraction | int = -1

    def __post_init__(self):
        if self.mu == 0 or self.nu == 0:
            raise ValueError("algebra parameters must be nonzero")

    def as_tuple(self):
        return (self.mu, self.nu)

    def eta(self):
        """Norm form on pure quaternions in the basis {-ij, j, i}."""
        mu, nu = float(self.mu), float(self.nu)
        return np.diag([mu * nu, -nu, -mu])


HAMILTON = AlgebraParams(-1, -1)
SPLIT = AlgebraParams(-1, 1)


def norm_form(alpha, beta, gamma, delta, mu, nu):
    return alpha * alpha - beta * beta * mu - gamma * gamma * nu + delta * delta * mu * nu


def rotation_matrix(params, alpha, beta, gamma, delta, tol=1e-9):
    """Matrix of ``Z -> q Z q^-1`` on pure quaternions.

    Coordinates (X, Y, Z) refer to the basis {-ij, j, i}, i.e. the pure
    quaternion ``Z i + Y j - X ij``.

    Raises
    ------
    NotUnitNorm
        If the norm of ``q = alpha + beta i + gamma j + delta ij`` is not 1.
    """
    mu, nu = params.as_tuple() if isinstance(params, AlgebraParams) else params
    mu = float(mu) if isinstance(mu, Fraction) else mu
    nu = float(nu) if isinstance(nu, Fraction) else nu
    a, b, c, d = alpha, beta, gamma, delta
    n = norm_form(a, b, c, d, mu, nu)
    if abs(n - 1) > tol:
        raise NotUnitNorm(f"quaternion norm {n} differs from 1")
    a2, b2, c2, d2 = a * a, b * b, c * c, d * d
    return np.array([
        [a2 + mu * b2 + nu * c2 + mu * nu * d2, -2 * a * b + 2 * nu * c * d, 2 * a * c + 2 * mu * b * d],
        [-2 * mu * a * b - 2 * mu * nu * c * d, a2 + mu * b2 - nu * c2 - mu * nu * d2, -2 * mu * b * c - 2 * mu * a * d],
        [2 * nu * a * c - 2 * mu * nu * b * d, -2 * nu * b * c + 2 * nu * a * d, a2 - mu * b2 + nu * c2 - mu * nu * d2],
    ])
