import csv
import io
import json
import math

import pytest

from quatrep.classify import Region
from quatrep.errors import ArgumentError, UnsupportedIdeal
from quatrep.numerics import (
    CSV_HEADER, csv_text, emit_csv, emit_json, grid, region_profile, sample_variety,
    solve_branches,
)
from quatrep.polyalg import parse_poly
from quatrep.variety import c_ideal

from conftest import FIG8_P, SQRT5_2, TREFOIL_P


@pytest.fixture(scope="module")
def tref_ideal():
    return c_ideal("aba=bab")


@pytest.fixture(scope="module")
def fig8_ideal():
    return c_ideal("aba^-1b^-1a = ba^-1b^-1ab")


def fig8_disc(x):
    return 5 - 24 * x * x + 16 * x ** 4


def test_grid_is_exact():
    g = grid(-2, 2, 0.01)
    assert len(g) == 401 and g[0] == -2 and g[-1] == 2
    with pytest.raises(ArgumentError):
        grid(0, 1, 0)
    with pytest.raises(ArgumentError):
        grid(0, 1, -0.1)
    with pytest.raises(ArgumentError):
        grid(1, 0, 0.1)


def test_trefoil_at_zero(tref_ideal):
    (smp,) = sample_variety(tref_ideal, 0, 0, 1)
    assert smp.y_branches == [-0.5]
    assert smp.regions == [Region.Case1_S3]
    assert smp.profiles == [-0.5]


def test_figure_eight_at_zero(fig8_ideal):
    (smp,) = sample_variety(fig8_ideal, 0, 0, 1)
    # quadratic oracle for 1 - 2y - 4y^2
    expected = sorted([(-1 + math.sqrt(5)) / 4, (-1 - math.sqrt(5)) / 4])
    assert smp.y_branches == pytest.approx(expected, abs=1e-12)


def test_figure_eight_branches_coincide_at_half(fig8_ideal):
    (smp,) = sample_variety(fig8_ideal, 0.5, 0.5, 1)
    assert smp.y_branches == [-0.25]


def test_branch_count_matches_discriminant(fig8_ideal):
    for smp in sample_variety(fig8_ideal, -1.2, 1.2, 0.01):
        d = fig8_disc(smp.x_exact)
        assert len(smp.y_branches) == (2 if d > 0 else 1 if d == 0 else 0)


def test_points_lie_on_curve(tref_ideal, fig8_ideal):
    for ideal, g in ((tref_ideal, TREFOIL_P), (fig8_ideal, FIG8_P)):
        g = parse_poly(g)
        for smp in sample_variety(ideal, -1.5, 1.5, 0.01):
            for y in smp.y_branches:
                assert abs(g(x=smp.x, y=y)) < 1e-9


def test_branch_ids_are_continuous(fig8_ideal):
    samples = sample_variety(fig8_ideal, -1.5, -1.2, 0.01)
    for a, b in zip(samples, samples[1:]):
        assert sorted(a.branch_ids) == sorted(b.branch_ids)
        for ya, ia in zip(a.y_branches, a.branch_ids):
            yb = b.y_branches[b.branch_ids.index(ia)]
            assert abs(ya - yb) < 0.2


def test_rejects_s():
    with pytest.raises(UnsupportedIdeal):
        sample_variety([parse_poly("s*x - 1")], 0, 1, 0.5)


def test_profile_rows(tref_ideal):
    rows = region_profile(sample_variety(tref_ideal, -2, 2, 0.01))
    assert len(rows) == 401
    assert [r.x for r in rows] == sorted(r.x for r in rows)
    at0 = next(r for r in rows if r.x == 0)
    assert at0.profile == -0.5 and at0.region is Region.Case1_S3
    verticals = [r.x for r in rows if r.vertical]
    assert any(abs(x - 1) < 0.011 for x in verticals) and any(abs(x + 1) < 0.011 for x in verticals)
    crossings = [r.x for r in rows if r.parabola_crossing]
    assert any(abs(abs(x) - math.sqrt(3) / 2) < 0.011 for x in crossings)
    for r in rows:
        if abs(1 - r.x * r.x) < 1e-9:
            assert r.profile is None


def test_profile_at_special_points(tref_ideal, fig8_ideal):
    # exact boundary point for the trefoil: profile 1, complex boundary region
    x = math.sqrt(3) / 2
    ys = solve_branches(tref_ideal, x)
    assert ys == pytest.approx([0.25])
    assert ys[0] / (1 - x * x) == pytest.approx(1)
    ys = solve_branches(fig8_ideal, SQRT5_2)
    assert any(abs(y + 0.25) < 1e-6 for y in ys)
    assert -0.25 / (1 - SQRT5_2 ** 2) == pytest.approx(1)


def test_csv_header_and_empty(tmp_path):
    path = emit_csv([], tmp_path / "empty.csv")
    assert open(path).read() == ",".join(CSV_HEADER) + "\n"


def test_csv_ordering_and_content(fig8_ideal, tmp_path):
    samples = sample_variety(fig8_ideal, -1, 1, 0.25)
    text = csv_text(samples)
    rows = list(csv.DictReader(io.StringIO(text)))
    keys = [(float(r["x"]), float(r["y"])) for r in rows]
    assert keys == sorted(keys)
    for r in rows:
        if abs(abs(float(r["x"])) - 1) < 1e-12:
            assert r["profile"] == ""
        Region.from_label(r["region"])
    path = emit_json(samples, tmp_path / "s.json")
    recs = json.load(open(path))
    assert len(recs) == len(rows)
    assert set(recs[0]) == set(CSV_HEADER)


def test_region_labels_locally_constant(tref_ideal):
    rows = region_profile(sample_variety(tref_ideal, -2, 2, 0.01))
    for a, b in zip(rows, rows[1:]):
        if a.region is not b.region:
            assert b.parabola_crossing or b.vertical or a.region.is_boundary or b.region.is_boundary \
                or abs(abs(a.profile or 0) - 1) < 0.05 or abs(abs(b.x) - 1) < 0.011
