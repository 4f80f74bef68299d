"""Sampling the real variety and the profile y / (1 - x^2).

Regions of the real-point classification are read off the graph of
y / (1 - x^2): its crossings with +-1 are the parabolas y = +-(1 - x^2) and
x = +-1 are vertical asymptotes.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .classify import Region, classify_point
from .errors import ArgumentError, UnsupportedIdeal
from .polyalg import DEFAULT_EPS, Ideal, Poly, univariate_real_roots
from .polyalg.roots import isolate, _trim
from .variety import CIdeal

PROFILE_TOL = 1e-9
MATCH_TOL = 1e-9
CSV_HEADER = ("x", "y", "branch", "region", "profile")


@dataclass
class CurveSample:
    """Real points of the variety above one grid value of x."""

    x: float
    y_branches: list
    regions: list
    profiles: list
    branch_ids: list
    x_exact: Fraction | None = None


@dataclass(frozen=True)
class ProfileRow:
    x: float
    y: float
    branch: int
    region: Region
    profile: float | None
    parabola_crossing: bool = False
    vertical: bool = False

    def as_record(self):
        return {
            "x": self.x,
            "y": self.y,
            "branch": self.branch,
            "region": self.region.value,
            "profile": self.profile,
        }


def _generators(ideal):
    if isinstance(ideal, CIdeal):
        gens = ideal.simplified.generators
    elif isinstance(ideal, Ideal):
        gens = ideal.generators
    else:
        gens = tuple(Poly.coerce(g) for g in ideal)
    for g in gens:
        if "s" in g.variables():
            raise UnsupportedIdeal(f"generator {g} involves s")
    return gens


def grid(x_min, x_max, step):
    """Exact grid x_min, x_min + step, ... <= x_max (decimal inputs read exactly)."""
    lo, hi, h = (Fraction(str(v)) if isinstance(v, float) else Fraction(v) for v in (x_min, x_max, step))
    if h <= 0:
        raise ArgumentError(f"step must be positive, got {step}")
    if hi < lo:
        raise ArgumentError(f"empty interval [{x_min}, {x_max}]")
    n = math.floor((hi - lo) / h) + 1
    return [lo + k * h for k in range(n)]


def _y_roots(gens, x0, eps):
    subs = [g.substitute({"x": x0}) for g in gens]
    subs = [p for p in subs if not p.is_zero()]
    if any(not p.variables() for p in subs):
        return []
    if not subs:
        return []
    subs.sort(key=lambda p: p.degree("y"))
    root_sets = [[float((a + b) / 2) for a, b in univariate_real_roots(p, eps=eps)] for p in subs]
    ys = root_sets[0]
    for other in root_sets[1:]:
        ys = [y for y in ys if any(abs(y - z) <= MATCH_TOL * max(1.0, abs(y)) for z in other)]
    return ys


def _profile(x, y):
    u = 1 - x * x
    return None if abs(u) < PROFILE_TOL else y / u


def sample_variety(ideal, x_min, x_max, step, eps=DEFAULT_EPS):
    """Real points (x, y) of V(ideal) over a grid of x values.

    For each grid value the generators are specialised exactly at x and
    their real y-roots isolated by Sturm sequences; roots common to all
    generators are kept.  Branch ids follow nearest-y continuation.

    Raises
    ------
    UnsupportedIdeal
        If a generator involves s.
    ArgumentError
        For a non-positive step or an empty interval.
    """
    gens = _generators(ideal)
    samples = []
    prev = []
    next_id = 0
    for xe in grid(x_min, x_max, step):
        x = float(xe)
        ys = sorted(_y_roots(gens, xe, eps))
        ids = [None] * len(ys)
        pairs = sorted(
            ((abs(y - py), i, pid) for i, y in enumerate(ys) for pid, py in prev),
        )
        used = set()
        for _, i, pid in pairs:
            if ids[i] is None and pid not in used:
                ids[i] = pid
                used.add(pid)
        for i in range(len(ys)):
            if ids[i] is None:
                ids[i] = next_id
                next_id += 1
        prev = list(zip(ids, ys))
        samples.append(CurveSample(
            x=x,
            y_branches=ys,
            regions=[classify_point(x, y) for y in ys],
            profiles=[_profile(x, y) for y in ys],
            branch_ids=ids,
            x_exact=xe,
        ))
    return samples


def region_profile(samples):
    """Flatten samples into rows (x, y, branch, region, profile).

    Rows are flagged where the profile crosses +-1 (a parabola
    y = +-(1 - x^2)) or x crosses +-1, comparing with the previous row of the
    same branch.
    """
    rows = []
    last = {}
    for smp in samples:
        for y, reg, prof, bid in zip(smp.y_branches, smp.regions, smp.profiles, smp.branch_ids):
            u = 1 - smp.x * smp.x
            crossing = prof is not None and abs(abs(prof) - 1) < PROFILE_TOL
            vertical = abs(u) < PROFILE_TOL
            if bid in last:
                pu, pprof = last[bid]
                if pu * u < 0:
                    vertical = True
                if prof is not None and pprof is not None and (abs(pprof) - 1) * (abs(prof) - 1) < 0:
                    crossing = True
            last[bid] = (u, prof)
            rows.append(ProfileRow(smp.x, y, bid, reg, prof, crossing, vertical))
    rows.sort(key=lambda r: (r.x, r.y))
    return rows


def _rows(data):
    if data and isinstance(data[0], CurveSample):
        return region_profile(data)
    return sorted(data, key=lambda r: (r.x, r.y))


def _fmt(v):
    return "" if v is None else format(v, ".12g")


def csv_text(data):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in _rows(data):
        w.writerow([_fmt(r.x), _fmt(r.y), r.branch, r.region.value, _fmt(r.profile)])
    return buf.getvalue()


def emit_csv(data, path):
    """Write samples or profile rows as CSV with header x,y,branch,region,profile."""
    text = csv_text(data)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return path


def json_records(data):
    return [r.as_record() for r in _rows(data)]


def emit_json(data, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(json_records(data), fh, indent=1)
    return path


def solve_branches(ideal, x0, tol=1e-9, eps=DEFAULT_EPS):
    """Real y with (x0, y) on the variety, tolerant to x0 being rounded.

    Besides exact roots at the float x0, critical points of the primary
    generator where every generator is within ``tol`` of zero are kept;
    this recovers tangential branches (double roots) that rounding of x0
    pushes off the real axis.
    """
    gens = _generators(ideal)
    xe = Fraction(x0)
    subs = [g.substitute({"x": xe}) for g in gens]
    subs = [p for p in subs if not p.is_zero()]
    if not subs or any(not p.variables() for p in subs):
        return []
    subs.sort(key=lambda p: p.degree("y"))
    primary = subs[0]
    cands = [float((a + b) / 2) for a, b in univariate_real_roots(primary, eps=eps)]
    dp = primary.derivative("y")
    if dp.variables():
        for a, b in univariate_real_roots(dp, eps=eps):
            y = float((a + b) / 2)
            if all(abs(p(y=y)) <= tol for p in subs) and not any(abs(y - c) < math.sqrt(tol) for c in cands):
                cands.append(y)
    out = [y for y in cands if all(abs(p(y=y)) <= tol * max(1.0, abs(y)) ** p.degree("y") for p in subs)]
    return sorted(out)
