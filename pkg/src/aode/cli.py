"""Command-line front end: ``aode <command> [input] [options]``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import output
from .algebraic import alg_solution_system
from .chains import chain_dimension, triangularize
from .errors import AodeError, ParseError, TrivialSystem
from .kernel.numberfield import fields_for_irreducible
from .oracle import verify_truncation
from .parser import parse_series, parse_system, parse_upoly
from .puiseux import (branches_at, default_order, pole_branches, prepare,
                      puiseux_solve_system, solve_at_point)
from .reduction import reduce_system
from .series import INFINITY


def _read_input(args):
    if args.expr is not None:
        return args.expr
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _rational(text, what):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{what}: expected a rational number, got {text!r}") from None


def _point(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"--point expects x0,y0, got {text!r}")
    x0 = _rational(parts[0], "--point")
    y0 = parts[1].strip().lower()
    return x0, (INFINITY if y0 in ("inf", "infinity", "oo") else _rational(y0, "--point"))


def _emit(args, lines, data):
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(lines))


# -- commands -------------------------------------------------------------------

def cmd_reduce(args, system):
    red = reduce_system(system)
    _emit(args, output.reduced_text(red), output.reduced_json(red))
    return 0


def cmd_triangularize(args, system):
    names = system.names()
    chains = triangularize(list(system.equations), system.nvars)
    data = [{"chain": [p.format(names) for p in c],
             "leading_variables": [names[v] for v in c.lv_pattern],
             "dimension": chain_dimension(c, system.nvars)} for c in chains]
    lines = [f"chain {i}: {{{', '.join(d['chain'])}}}  dimension {d['dimension']}"
             for i, d in enumerate(data, 1)] or ["no chains (inconsistent system)"]
    _emit(args, lines, {"chains": data})
    return 0


def _solve_point(args, system):
    x0, y0 = _point(args.point)
    red = reduce_system(system)
    h = prepare(red.H)
    order = Fraction(args.order) if args.order is not None else Fraction(default_order(h))
    if y0 == INFINITY:
        truncs = pole_branches(h, order) if not h.is_constant() else []
        for t in truncs:
            t.center = x0
    else:
        truncs = solve_at_point(system, x0, y0, order, red)
    checks = [verify_truncation(system, t) for t in truncs]
    data = {"point": [output.fmt_rational(x0), "infinity" if y0 == INFINITY
                      else output.fmt_rational(y0)],
            "order": output.fmt_rational(order),
            "branches": [output.truncation_json(t, c) for t, c in zip(truncs, checks)]}
    lines = [f"solutions with y({output.fmt_rational(x0)}) = {data['point'][1]}, "
             f"order {data['order']}:"]
    for t, c in zip(truncs, checks):
        lines += output.truncation_text(t, c)
    if not truncs:
        lines.append("  none")
    _emit(args, lines, data)
    return 0 if all(c.ok for c in checks) else 1


def cmd_solve(args, system):
    if args.point:
        return _solve_point(args, system)
    sols = puiseux_solve_system(system, args.order, args.at_infinity)
    _emit(args, output.solutions_text(sols, args.at_infinity), output.solutions_json(sols))
    return 0 if all(c.ok for c in sols.checks.values()) else 1


def cmd_solve_algebraic(args, system):
    res = alg_solution_system(system)
    _emit(args, output.algebraic_text(res, args.rational_only),
          output.algebraic_json(res, args.rational_only))
    return 0


def _generator(args):
    if args.minpoly is None:
        return None
    mp = parse_upoly(args.minpoly, "t")
    fields = fields_for_irreducible(mp, args.gen_name)
    if args.root is None:
        return fields[0].gen
    if "," in args.root:
        lo, hi = (_rational(s, "--root") for s in args.root.split(","))
        hits = [f for f in fields if f.selector[0] == "real"
                and f.selector[1] <= hi and f.selector[2] >= lo]
        if len(hits) != 1:
            raise ParseError(f"--root interval [{lo}, {hi}] must isolate exactly one real root")
        return hits[0].gen
    try:
        return fields[int(args.root)].gen
    except (ValueError, IndexError):
        raise ParseError(f"--root: no root number {args.root!r}") from None


def cmd_verify(args, system):
    gen = _generator(args)
    trunc = parse_series(args.series, args.order, args.at_infinity, gen, args.gen_name,
                         exact=args.exact)
    res = verify_truncation(system, trunc)
    vals = [None if v is None else output.fmt_rational(v) for v in res.residual_valuations]
    bounds = [None if b is None else output.fmt_rational(b) for b in res.bounds]
    data = {"ok": res.ok, "order": output.fmt_rational(res.order),
            "residual_valuations": vals, "bounds": bounds}
    lines = [f"verified: {'yes' if res.ok else 'no'} (order {data['order']})"]
    for i, (v, b) in enumerate(zip(vals, bounds), 1):
        shown = "identically zero" if v is None else v
        need = "" if b is None else f", must exceed {b}"
        lines.append(f"  equation {i}: residual valuation {shown}{need}")
    _emit(args, lines, data)
    return 0 if res.ok else 1


COMMANDS = {"reduce": cmd_reduce, "triangularize": cmd_triangularize, "solve": cmd_solve,
            "solve-algebraic": cmd_solve_algebraic, "verify": cmd_verify}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="input file (default: stdin)")
    common.add_argument("-e", "--expr", help="system given inline, equations separated by ';'")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--var", default="y", help="name of the unknown function")

    ap = argparse.ArgumentParser(prog="aode",
                                 description="Solve autonomous algebraic ODE systems exactly.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("reduce", parents=[common], help="reduced first-order equation")
    sub.add_parser("triangularize", parents=[common], help="regular chains of the system")
    sp = sub.add_parser("solve", parents=[common], help="formal Puiseux series solutions")
    sp.add_argument("--order", type=Fraction)
    sp.add_argument("--at-infinity", action="store_true")
    sp.add_argument("--point", help="x0,y0 with y0 rational or 'inf'")
    sa = sub.add_parser("solve-algebraic", parents=[common], help="algebraic and rational solutions")
    sa.add_argument("--rational-only", action="store_true")
    sv = sub.add_parser("verify", parents=[common], help="check a truncation against the system")
    sv.add_argument("--series", required=True, help="e.g. '1 + x - 1/2*x^2' or 'a*x^(1/2)'")
    sv.add_argument("--order", type=Fraction, required=True)
    sv.add_argument("--at-infinity", action="store_true")
    sv.add_argument("--exact", action="store_true", help="the series is a complete solution")
    sv.add_argument("--minpoly", help="minimal polynomial in t of the generator")
    sv.add_argument("--root", help="isolating interval lo,hi or complex root number")
    sv.add_argument("--gen-name", default="a")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        source = parse_system(_read_input(args), args.var)
        return COMMANDS[args.command](args, source.parsed)
    except TrivialSystem as exc:
        print(f"only constant solutions: {exc}")
        return exc.exit_code
    except AodeError as exc:
        print(f"aode: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"aode: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
