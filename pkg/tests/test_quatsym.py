import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatrep.classify import NumQuaternion, embed_2x2
from quatrep.errors import NotUnitNorm
from quatrep.polyalg import ONE, X, Y, parse_poly
from quatrep.presentation import parse_word
from quatrep.quatsym import (
    COORDS, E0, GRAM, HAMILTON, I4, SPLIT, U, basis_vector, conj_action, eval_conj, eval_word,
    left_mult, left_mult_basis, right_mult, right_mult_basis, rotation_matrix,
)

from conftest import random_unit_quaternion, words

P = parse_poly
M_AM, M_BM, M_ABM = left_mult_basis()
R_AM, R_BM, R_ABM = right_mult_basis()


def test_left_matrices_entries():
    assert M_AM.rows[0] == (0, -U, -Y, 0)
    assert M_ABM[3, 0] == ONE
    assert M_ABM[0, 3] == Y * Y - U * U


def test_conjugate_is_inverse():
    for m in (M_AM, M_BM):
        mx = I4.scale(X) + m
        mbar = I4.scale(X) - m
        assert mx @ mbar == I4
        assert mbar @ mx == I4


def test_multiplication_table():
    u, y = U, Y
    a, b, ab = basis_vector(1), basis_vector(2), basis_vector(3)
    assert M_AM @ a == [-u, 0, 0, 0]
    assert M_BM @ b == [-u, 0, 0, 0]
    assert M_AM @ b == [-y, 0, 0, 1]
    assert M_BM @ a == [-y, 0, 0, -1]
    assert M_ABM @ a == [0, -y, u, 0]
    assert M_ABM @ b == [0, -u, y, 0]
    assert M_AM @ ab == [0, y, -u, 0]
    assert M_BM @ ab == [0, u, -y, 0]
    assert M_ABM @ ab == [y * y - u * u, 0, 0, 0]


def test_right_multiplication_columns():
    assert R_AM.column(1) == [-U, 0, 0, 0]
    assert R_BM.column(1) == [-Y, 0, 0, 1]
    # column j of r(X) is basis_j * X
    for r, lm in ((R_AM, M_AM), (R_BM, M_BM), (R_ABM, M_ABM)):
        assert r.column(0) == lm.column(0)


def test_left_and_right_commute():
    for m in (M_AM, M_BM, M_ABM):
        for r in (R_AM, R_BM, R_ABM):
            assert m @ r == r @ m


def test_eval_word_examples():
    assert eval_word(parse_word("")) == I4
    assert eval_word(parse_word("aA")) == I4
    diff = (eval_word(parse_word("aba")) - eval_word(parse_word("bab"))) @ E0
    assert diff == [0, P("-1+2*x^2-2*y"), P("1-2*x^2+2*y"), 0]


def test_conj_action_examples():
    assert conj_action("b") @ basis_vector(1) == [0, P("2*x^2-1"), 2 * Y, -2 * X]
    assert conj_action("a") @ basis_vector(1) == basis_vector(1)
    assert conj_action("a") @ conj_action("A") == I4


@pytest.mark.parametrize("letter", "abAB")
def test_conj_action_shape_and_gram(letter):
    c = conj_action(letter)
    assert c[0, 0] == ONE
    assert all(c[0, j].is_zero() and c[j, 0].is_zero() for j in range(1, 4))
    block = c.block([1, 2, 3], [1, 2, 3])
    assert block.transpose() @ GRAM @ block == GRAM


# numeric oracle: a random pair with equal scalar parts in Hamilton's quaternions

def _random_pair(rng):
    x = rng.uniform(-0.95, 0.95)
    r = math.sqrt(1 - x * x)
    pa, pb = (v / np.linalg.norm(v) * r for v in rng.normal(size=(2, 3)))
    A = NumQuaternion(x, *pa, params=HAMILTON)
    B = NumQuaternion(x, *pb, params=HAMILTON)
    y = -(A.minus * B.minus).plus
    return A, B, x, y


def _coords(q, A, B):
    basis = [NumQuaternion(1, params=HAMILTON), A.minus, B.minus, (A.minus * B.minus).minus]
    m = np.array([b.comps for b in basis]).T
    return np.linalg.solve(m, np.array(q.comps))


def _numeric(w, A, B):
    img = {"a": A, "b": B, "A": A.conjugate(), "B": B.conjugate()}
    acc = NumQuaternion(1, params=HAMILTON)
    for c in w.letters:
        acc = acc * img[c]
    return acc


@settings(max_examples=50, deadline=None)
@given(words, st.integers(0, 2**32 - 1))
def test_eval_word_matches_numeric_product(w, seed):
    A, B, x, y = _random_pair(np.random.default_rng(seed))
    sym = eval_word(w).column(0)
    got = np.array([float(p(x=x, y=y)) for p in sym])
    assert np.allclose(got, _coords(_numeric(w, A, B), A, B), atol=1e-8)


@settings(max_examples=30, deadline=None)
@given(words, st.integers(0, 2**32 - 1))
def test_eval_conj_matches_numeric_conjugation(w, seed):
    A, B, x, y = _random_pair(np.random.default_rng(seed))
    g = _numeric(w, A, B)
    target = A.minus
    conj = g * target * g.conjugate()
    sym = eval_conj(w) @ basis_vector(1)
    got = np.array([float(p(x=x, y=y)) for p in sym])
    assert np.allclose(got, _coords(conj, A, B), atol=1e-8)


def test_right_mult_matches_numeric():
    A, B, x, y = _random_pair(np.random.default_rng(7))
    for letter, q in (("a", A), ("b", B)):
        r = right_mult(COORDS[letter])
        for j, bj in enumerate([NumQuaternion(1, params=HAMILTON), A.minus, B.minus, (A.minus * B.minus).minus]):
            got = np.array([float(p(x=x, y=y)) for p in r.column(j)])
            assert np.allclose(got, _coords(bj * q, A, B), atol=1e-10)
    assert left_mult(COORDS["a"]) == I4.scale(X) + M_AM


# the conjugation action on pure quaternions

def _conj_numeric(params, q, v):
    """Oracle: conjugate the pure quaternion with (X, Y, Z) coords via 2x2 matrices."""
    X_, Y_, Z_ = v
    p = NumQuaternion(0, Z_, Y_, -X_, params=params)
    m = embed_2x2(q) @ embed_2x2(p) @ np.linalg.inv(embed_2x2(q))
    # read back coordinates from the 2x2 image
    a, b, c, d = _from_2x2(params, m)
    return np.array([-d, c, b])


def _from_2x2(params, m):
    if params == SPLIT:
        a = (m[0, 0] + m[1, 1]) / 2
        d = (m[0, 0] - m[1, 1]) / 2
        b = (m[0, 1] - m[1, 0]) / 2
        c = (m[0, 1] + m[1, 0]) / 2
    else:
        a = (m[0, 0] + m[1, 1]) / 2
        d = (m[1, 1] - m[0, 0]) / 2j
        b = (m[1, 0] - m[0, 1]) / 2
        c = (m[0, 1] + m[1, 0]) / 2j
    return [complex(v).real for v in (a, b, c, d)]


@pytest.mark.parametrize("params", [HAMILTON, SPLIT])
def test_rotation_matrix_matches_conjugation(params):
    rng = np.random.default_rng(3)
    for _ in range(20):
        comps = random_unit_quaternion(rng, params.as_tuple())
        q = NumQuaternion(*comps, params=params)
        m = rotation_matrix(params, *comps)
        for v in np.eye(3):
            assert np.allclose(m @ v, _conj_numeric(params, q, v), atol=1e-9)


def test_rotation_matrix_examples():
    th = 0.7
    m = rotation_matrix(HAMILTON, math.cos(th / 2), math.sin(th / 2), 0, 0)
    assert np.allclose(m, [[math.cos(th), -math.sin(th), 0], [math.sin(th), math.cos(th), 0], [0, 0, 1]], atol=1e-12)
    assert np.allclose(rotation_matrix(SPLIT, 1, 1, 1, 0), [[1, -2, 2], [2, -1, 2], [2, -2, 3]])


def test_rotation_matrix_hyperbolic_sign():
    # direct conjugation gives +sinh d off the diagonal
    d = 0.9
    m = rotation_matrix(SPLIT, math.cosh(d / 2), 0, math.sinh(d / 2), 0)
    expected = [[math.cosh(d), 0, math.sinh(d)], [0, 1, 0], [math.sinh(d), 0, math.cosh(d)]]
    assert np.allclose(m, expected, atol=1e-12)
    q = NumQuaternion(math.cosh(d / 2), 0, math.sinh(d / 2), 0, params=SPLIT)
    assert np.allclose(m @ [1, 0, 0], _conj_numeric(SPLIT, q, [1, 0, 0]), atol=1e-12)


def test_rotation_matrix_requires_unit_norm():
    with pytest.raises(NotUnitNorm):
        rotation_matrix(HAMILTON, 1, 1, 0, 0)
