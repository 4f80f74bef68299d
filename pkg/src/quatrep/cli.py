"""Command-line interface: ``quatrep {ideal,classify,affine,two-bridge,sample,verify}``.

Exit codes: 0 success, 2 parse or argument error, 3 off-variety or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .affine import affine_ideal
from .classify import BOUNDARY_TOL, VERIFY_TOL, classify
from .errors import (
    ArgumentError, DegeneratePoint, DomainError, EmptyWordError, NotExpressible,
    OffVariety, UnsupportedIdeal, WordSyntaxError,
)
from .numerics import csv_text, json_records, sample_variety, solve_branches
from .presentation import Presentation, parse_presentation, two_bridge
from .variety import c_ideal, to_trace_coords, trace_str

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 2, 3


@dataclass
class Config:
    presentation: Presentation | None
    verify_tol: float = VERIFY_TOL
    boundary_tol: float = BOUNDARY_TOL
    fmt: str = "text"
    out: str | None = None


def fmt_num(v):
    """12 significant digits; complex values as a+bj."""
    v = complex(v) if isinstance(v, (complex, np.complexfloating)) else v
    if isinstance(v, complex):
        if v.imag == 0:
            return format(v.real + 0.0, ".12g")
        return f"{v.real + 0.0:.12g}{v.imag + 0.0:+.12g}j"
    return format(float(v) + 0.0, ".12g")


def fmt_matrix(m):
    return "[" + ", ".join("[" + ", ".join(fmt_num(e) for e in row) + "]" for row in m) + "]"


def _presentation(args):
    sources = [s for s in (args.presentation, args.file, args.two_bridge) if s is not None]
    if len(sources) != 1:
        raise ArgumentError("give exactly one of -p/--presentation, -f/--file, --two-bridge P Q")
    if args.presentation is not None:
        return parse_presentation(args.presentation)
    if args.file is not None:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read().strip()
        if text.startswith("{"):
            return Presentation.from_json(json.loads(text))
        return parse_presentation(text, label=args.file)
    p, q = args.two_bridge
    return two_bridge(p, q)


def _config(args, need_presentation=True):
    if args.tol <= 0 or args.boundary_tol <= 0:
        raise ArgumentError("tolerances must be positive")
    pres = _presentation(args) if need_presentation else None
    return Config(pres, args.tol, args.boundary_tol, args.format, args.out)


def _json(obj):
    return json.dumps(obj, indent=1)


def cmd_ideal(cfg, trace_coords=False):
    ci = c_ideal(cfg.presentation)
    if cfg.fmt == "json":
        d = {"presentation": cfg.presentation.to_json()}
        d.update(ci.to_json(trace_coords))
        return _json(d)
    lines = [
        f"presentation: {cfg.presentation}",
        "raw = ( " + ", ".join(p.to_str(spaced=True) for p in ci.raw) + " )",
    ]
    if ci.simplified.is_zero():
        lines.append("I = < > (all (x,y))")
    else:
        lines.append(f"I = {ci.simplified}")
    if trace_coords:
        try:
            tc = [trace_str(to_trace_coords(g)) for g in ci.simplified]
            lines.append("I(x', z) = < " + ", ".join(tc) + " >")
        except NotExpressible as exc:
            lines.append(f"I(x', z): not expressible ({exc})")
    return "\n".join(lines)


def _classify_text(cp):
    lines = [f"point (x, y) = ({fmt_num(cp.x)}, {fmt_num(cp.y)})", f"region: {cp.region.value} ({cp.region.name})"]
    if cp.A is None:
        lines.append("no irreducible or almost-irreducible representation")
        return "\n".join(lines)
    mu, nu = cp.params.as_tuple()
    lines += [
        f"algebra: ({mu},{nu})" + (" over C" if cp.A.field == "complex" or cp.B.field == "complex" else ""),
        "A = (" + ", ".join(fmt_num(c) for c in cp.A.comps) + ")",
        "B = (" + ", ".join(fmt_num(c) for c in cp.B.comps) + ")",
        f"field: {cp.field}",
    ]
    if cp.invariant is not None:
        lines.append(f"invariant: {cp.invariant.kind} = {fmt_num(cp.invariant.value)}")
    lines.append(f"reducibility: {cp.reducibility}")
    m2, m3 = cp.mat2(), cp.mat3()
    lines += [
        f"mat2 A = {fmt_matrix(m2[0])}",
        f"mat2 B = {fmt_matrix(m2[1])}",
        f"mat3 A = {fmt_matrix(m3[0])}",
        f"mat3 B = {fmt_matrix(m3[1])}",
    ]
    if cp.residual is not None:
        lines.append(f"residual: {cp.residual:.3g}")
    for note in cp.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _points(cfg, x, y):
    ci = c_ideal(cfg.presentation)
    if y is not None:
        for g in ci.simplified:
            val = g(x=x, y=y)
            if abs(val) > cfg.verify_tol:
                raise OffVariety(f"({x}, {y}) violates {g.to_str(spaced=True)} by {abs(val):.3g}")
        return [y]
    ys = solve_branches(ci, x, tol=cfg.verify_tol)
    if not ys:
        raise OffVariety(f"no real points of the variety above x = {x}")
    return ys


def cmd_classify(cfg, x, y=None):
    cps = [classify(x, yy, cfg.presentation, cfg.verify_tol, cfg.boundary_tol) for yy in _points(cfg, x, y)]
    if cfg.fmt == "json":
        return _json([cp.to_json() for cp in cps])
    return "\n\n".join(_classify_text(cp) for cp in cps)


def cmd_verify(cfg, x, y=None):
    """Classify, then report whether each constructed pair satisfies the relation."""
    cps = [classify(x, yy, cfg.presentation, cfg.verify_tol, cfg.boundary_tol) for yy in _points(cfg, x, y)]
    ok = all(cp.residual is not None and cp.residual < cfg.verify_tol for cp in cps)
    if cfg.fmt == "json":
        text = _json([{"x": cp.x, "y": cp.y, "region": cp.region.value, "residual": cp.residual,
                       "ok": cp.residual is not None and cp.residual < cfg.verify_tol} for cp in cps])
    else:
        text = "\n".join(
            f"({fmt_num(cp.x)}, {fmt_num(cp.y)}) region {cp.region.value}: "
            + ("no pair" if cp.residual is None else f"residual {cp.residual:.3g} " + ("ok" if cp.residual < cfg.verify_tol else "FAIL"))
            for cp in cps
        )
    return text, ok


def cmd_affine(cfg, minus_sign=False):
    aff = affine_ideal(cfg.presentation, minus_sign=minus_sign)
    if cfg.fmt == "json":
        return _json(aff.to_json())
    return "\n".join([
        f"presentation: {cfg.presentation}",
        f"p = {aff.p_gens}",
        f"q = {aff.q_gens}",
        f"groebner = {aff.combined}",
    ])


def cmd_sample(cfg, x_min, x_max, step):
    samples = sample_variety(c_ideal(cfg.presentation), x_min, x_max, step)
    if cfg.fmt == "json":
        return _json(json_records(samples))
    return csv_text(samples).rstrip("\n")


def cmd_two_bridge(cfg, p, q):
    pres = two_bridge(p, q)
    if cfg.fmt == "json":
        return _json(pres.to_json())
    return str(pres)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("presentation source")
    src.add_argument("-p", "--presentation", help='relation such as "aba=bab" or a relator "abAB"')
    src.add_argument("-f", "--file", help="file holding the presentation text or its JSON form")
    src.add_argument("--two-bridge", nargs=2, type=int, metavar=("P", "Q"), help="2-bridge knot group (P odd)")
    common.add_argument("--tol", type=float, default=VERIFY_TOL, help="verification tolerance (default 1e-9)")
    common.add_argument("--boundary-tol", type=float, default=BOUNDARY_TOL, help="region boundary band (default 1e-9)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(prog="quatrep", description="c-representations of two-generator groups in unit quaternions")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideal", parents=[common], help="ideal of c-representations")
    p.add_argument("--trace-coords", action="store_true", help="also print the ideal in (x', z)")

    for name, helptext in (("classify", "classify real points above x"), ("verify", "check constructed pairs against the relation")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--x", type=float, required=True)
        p.add_argument("--y", type=float)

    p = sub.add_parser("affine", parents=[common], help="affine c-representation ideal in x, y, s")
    p.add_argument("--minus-sign", action="store_true", help="use v_b = s B- - (A-B-)-")

    p = sub.add_parser("two-bridge", parents=[common], help="print the 2-bridge presentation")
    p.add_argument("pq", nargs="*", type=int, metavar="P Q")

    p = sub.add_parser("sample", parents=[common], help="sample the real curve and its profile")
    p.add_argument("--x-min", type=float, default=-2.0)
    p.add_argument("--x-max", type=float, default=2.0)
    p.add_argument("--step", type=float, default=0.01)
    return parser


def _run(args):
    status = EXIT_OK
    if args.command == "two-bridge":
        pq = args.pq or args.two_bridge
        if not pq or len(pq) != 2:
            raise ArgumentError("two-bridge needs P and Q")
        cfg = _config(args, need_presentation=False)
        text = cmd_two_bridge(cfg, *pq)
    else:
        cfg = _config(args)
        if cfg.fmt == "csv" and args.command != "sample":
            raise ArgumentError("csv output is available for 'sample' only")
        if args.command == "ideal":
            text = cmd_ideal(cfg, args.trace_coords)
        elif args.command == "classify":
            text = cmd_classify(cfg, args.x, args.y)
        elif args.command == "verify":
            text, ok = cmd_verify(cfg, args.x, args.y)
            status = EXIT_OK if ok else EXIT_DOMAIN
        elif args.command == "affine":
            text = cmd_affine(cfg, args.minus_sign)
        else:
            text = cmd_sample(cfg, args.x_min, args.x_max, args.step)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except (WordSyntaxError, EmptyWordError, ArgumentError, UnsupportedIdeal) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OffVariety, DomainError, DegeneratePoint) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
