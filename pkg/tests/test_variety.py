import math
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatrep.errors import NotExpressible
from quatrep.polyalg import Poly, parse_poly
from quatrep.presentation import Relator, Word, two_bridge
from quatrep.variety import c_ideal, reducible_locus, to_trace_coords, trace_str

from conftest import FIG8_P, TREFOIL_P

P = parse_poly


def test_trefoil_ideal(trefoil):
    ci = c_ideal(trefoil)
    assert ci.raw == [0, P("-1+2*x^2-2*y"), P("1-2*x^2+2*y"), 0]
    assert ci.simplified.generators == (P(TREFOIL_P),)


def test_figure_eight_ideal(fig8):
    ci = c_ideal(fig8)
    f = P(FIG8_P)
    assert ci.simplified.generators == (f,)
    # second and third entries are opposite multiples of the generator
    assert ci.raw[0].is_zero() and ci.raw[3].is_zero()
    assert (ci.raw[1] + ci.raw[2]).is_zero()
    assert ci.raw[2] == f


def test_trivial_presentations():
    assert c_ideal(Relator(Word())).raw == [0, 0, 0, 0]
    assert c_ideal(Relator(Word())).simplified.generators == ()
    assert c_ideal("a=a").simplified.generators == ()


def test_relator_form_gives_same_ideal(trefoil, fig8):
    for p in (trefoil, fig8):
        assert c_ideal(Relator(p.relator)).simplified == c_ideal(p).simplified


@pytest.mark.parametrize("pq", [(3, 1), (5, 3), (7, 3)])
def test_cyclic_permutations_give_same_ideal(pq):
    rel = two_bridge(*pq).relator
    base = c_ideal(Relator(rel)).simplified
    letters = rel.letters
    for k in range(1, len(letters)):
        rotated = Word(letters[k:] + letters[:k])
        assert c_ideal(Relator(rotated)).simplified == base


def test_abelian_group_has_unit_ideal():
    # AB - BA = 2 (A-B-)-, a basis vector, so no pair with independent
    # {1, A-, B-, (A-B-)-} satisfies ab = ba
    assert c_ideal("ab=ba").simplified.generators == (P("1"),)


@pytest.mark.parametrize("p, q", [(7, 1), (7, 3), (9, 5), (11, 3)])
def test_two_bridge_raw_ends_vanish(p, q):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        ci = c_ideal(two_bridge(p, q))
    assert ci.raw[0].is_zero() and ci.raw[3].is_zero()


def test_trefoil_meets_upper_parabola_at_reducible_points(trefoil):
    g = c_ideal(trefoil).generators[0]
    x = math.sqrt(3) / 2
    assert abs(g(x=x, y=1 - x * x)) < 1e-12
    assert reducible_locus(x, 1 - x * x).realizable_by_reducible


def test_trace_coordinates():
    assert trace_str(to_trace_coords(P(TREFOIL_P))) == "z - 1"
    t = to_trace_coords(P("y"))
    assert t == P("2*y-x-2")  # x' - 2z + 2 up to sign, with x' in the x slot and z in the y slot
    assert trace_str(t) == "2*z - x' - 2"
    with pytest.raises(NotExpressible):
        to_trace_coords(P("x"))
    with pytest.raises(NotExpressible):
        to_trace_coords(P("s*x^2"))


@settings(max_examples=30)
@given(st.floats(-1.5, 1.5), st.floats(-2, 2))
def test_trace_coordinates_agree_numerically(x, y):
    p = P(FIG8_P)
    t = to_trace_coords(p)
    # t(x', z) is a fixed rational multiple of p(x, y); find it at one point
    x0, y0 = 0.7, 0.2
    ratio = t(x=4 * x0 ** 2 - 2, y=2 * x0 ** 2 - 2 * y0) / p(x=x0, y=y0)
    assert t(x=4 * x * x - 2, y=2 * x * x - 2 * y) == pytest.approx(ratio * p(x=x, y=y), abs=1e-9)


def test_reducible_locus_examples():
    r = reducible_locus(math.sqrt(3) / 2, 0.25, "knot")
    assert r.on_upper_parabola and not r.on_lower_parabola and r.realizable_by_reducible
    r = reducible_locus(0, -1, "knot")
    assert r.on_lower_parabola and not r.realizable_by_reducible
    assert reducible_locus(0, -1, "link").realizable_by_reducible
    r = reducible_locus(1, 0, "knot")
    assert r.on_upper_parabola and r.on_lower_parabola and r.realizable_by_reducible


def test_json_shape(trefoil):
    d = c_ideal(trefoil).to_json(trace_coords=True)
    assert set(d) == {"raw", "ideal", "trace_coords"}
    assert len(d["raw"]) == 4
    assert Poly.from_json(d["ideal"][0]) == P(TREFOIL_P)
    assert Poly.from_json(d["trace_coords"][0]) == P("y-1")
