"""Command-line front end.

Functions are given as paths to JSON function documents or as one of the
built-ins ``@tent``, ``@top`` (``1_[0,1]``), ``@unit`` (``1_{1}``) and
``@bottom`` (``1_{0}``).  Exit status is 0 on success, 1 when a suite or
replay fails, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import intervals as iv
from .convolution import (
    BOTTOM,
    TOP,
    UNIT,
    ConvolutionSpec,
    bar_meet,
    convolution_at_one,
    general_convolution,
    join_conv,
    meet_conv,
    negation,
    order_join,
    order_meet,
    star,
)
from .counterexamples import counterexample_q1, counterexample_q2, tent
from .document import dumps_function, parse_function, parse_interval, parse_rational
from .errors import T2FuzzyError
from .pwl import PiecewiseFn, eval_at, limits_at
from .tnorms import get_tnorm
from .verify import SUITES, GeneratorConfig, replay_witness, run_suite

BUILTINS = {"@tent": tent, "@top": lambda: TOP, "@unit": lambda: UNIT, "@bottom": lambda: BOTTOM}

OPS = ("meet", "join", "neg", "barmeet", "star", "conv", "conv-at-one", "order")
INTERVAL_OPS = ("meet", "join", "circled-star", "tnorm", "leq", "subset")


class UsageError(Exception):
    pass


def load_function(ref: str) -> PiecewiseFn:
    if ref.startswith("@"):
        if ref not in BUILTINS:
            raise UsageError(f"unknown built-in {ref!r}; known: {', '.join(BUILTINS)}")
        return BUILTINS[ref]()
    try:
        text = Path(ref).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {ref}: {exc.strerror}") from None
    try:
        return parse_function(text)
    except T2FuzzyError as exc:
        raise UsageError(f"{ref}: {exc}") from None


def render(v: Fraction, precision: int | None) -> str:
    """Exact ``p/q`` when ``precision`` is None, else a fixed-point decimal.

    The decimal form is for display and plotting only; it is rounded half
    away from zero at ``precision`` digits.
    """
    if precision is None:
        return str(v)
    scale = 10**precision
    n = abs(v) * scale
    k = int(n + Fraction(1, 2))
    sign = "-" if v < 0 and k else ""
    whole, frac = divmod(k, scale)
    return f"{sign}{whole}.{frac:0{precision}d}" if precision else f"{sign}{whole}"


# -- subcommands -----------------------------------------------------------------


def cmd_eval(args, out):
    f = load_function(args.function)
    x = parse_rational(args.x, "x")
    if args.limits:
        left, value, right = limits_at(f, x)
        out.write(f"left={left} value={value} right={right}\n")
    else:
        out.write(f"{eval_at(f, x)}\n")
    return 0


def cmd_op(args, out):
    f = load_function(args.f)
    if args.name == "neg":
        if args.g is not None:
            raise UsageError("neg takes a single function")
        out.write(dumps_function(negation(f)))
        return 0
    if args.g is None:
        raise UsageError(f"{args.name} needs two functions")
    g = load_function(args.g)
    if args.name in ("meet", "join", "barmeet", "star"):
        fn = {"meet": meet_conv, "join": join_conv, "barmeet": bar_meet, "star": star}[args.name]
        out.write(dumps_function(fn(f, g)))
    elif args.name == "order":
        holds = order_meet(f, g) if args.kind == "meet" else order_join(f, g)
        out.write(f"{str(holds).lower()}\n")
    else:
        spec = ConvolutionSpec.named(args.combiner, args.carrier)
        if args.name == "conv-at-one":
            out.write(f"{convolution_at_one(spec, f, g)}\n")
        else:
            out.write("x,value\n")
            for x, v in general_convolution(spec, f, g, args.resolution):
                out.write(f"{x},{v}\n")
    return 0


def cmd_interval(args, out):
    x, y = parse_interval(args.x), parse_interval(args.y)
    if args.name == "leq":
        out.write(f"{str(iv.leq_product(x, y)).lower()}\n")
    elif args.name == "subset":
        out.write(f"{str(iv.subset_order(x, y)).lower()}\n")
    else:
        if args.name == "tnorm":
            r = iv.convolution_interval_tnorm(get_tnorm(args.tnorm), x, y)
        else:
            r = {"meet": iv.meet, "join": iv.join, "circled-star": iv.circled_star}[args.name](x, y)
        out.write(f"{r}\n")
    return 0


def cmd_check(args, out):
    cfg = GeneratorConfig(
        seed=args.seed,
        max_breakpoints=args.max_breakpoints,
        denominator_bound=args.denominator_bound,
        unit_mass=args.unit_mass,
        endpoint_jump_mass=args.endpoint_jump_mass,
    )
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        rep = run_suite(name, cfg, args.trials)
        paths = rep.write_witnesses(args.witness_dir) if args.witness_dir else None
        out.write(rep.to_jsonl() if args.jsonl else rep.to_text(paths))
        ok = ok and rep.passed
    return 0 if ok else 1


def cmd_counterexample(args, out):
    rep = counterexample_q1() if args.which == "q1" else counterexample_q2()
    out.write("\n".join(rep.lines()) + "\n")
    return 0


def cmd_sample(args, out):
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    f = load_function(args.function)
    prec = None if args.exact else args.precision
    n = args.points - 1
    xs = sorted({Fraction(k, n) for k in range(n + 1)} | set(f.xs))
    breaks = set(f.xs)
    out.write("x,left,value,right\n" if args.with_right else "x,left,value\n")
    for x in xs:
        left, value, right = limits_at(f, x)
        lcol = render(left, prec) if x in breaks and x > 0 else ""
        row = [render(x, prec), lcol, render(value, prec)]
        if args.with_right:
            row.append(render(right, prec) if x in breaks and x < 1 else "")
        out.write(",".join(row) + "\n")
    return 0


def cmd_replay(args, out):
    try:
        doc = json.loads(Path(args.witness).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {args.witness}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.witness}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    holds = replay_witness(doc)
    out.write(f"{doc['law']}: {'holds' if holds else 'violated'} on the stored inputs\n")
    # a stored witness is a violation; replay succeeds when it reproduces
    return 1 if holds else 0


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="t2fuzzy", description="Exact operations on type-2 fuzzy truth values.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a function at a point")
    e.add_argument("function")
    e.add_argument("x")
    e.add_argument("--limits", action="store_true", help="also print the one-sided limits")
    e.set_defaults(run=cmd_eval)

    o = sub.add_parser("op", help="apply a named operation")
    o.add_argument("name", choices=OPS)
    o.add_argument("f")
    o.add_argument("g", nargs="?")
    o.add_argument("--combiner", default="min")
    o.add_argument("--carrier", default="min")
    o.add_argument("--resolution", type=int, default=20)
    o.add_argument("--kind", choices=("meet", "join"), default="meet", help="which order for 'order'")
    o.set_defaults(run=cmd_op)

    i = sub.add_parser("interval", help="operate on intervals written [a, b]")
    i.add_argument("name", choices=INTERVAL_OPS)
    i.add_argument("x")
    i.add_argument("y")
    i.add_argument("--tnorm", default="min")
    i.set_defaults(run=cmd_interval)

    c = sub.add_parser("check", help="run a property suite")
    c.add_argument("suite", choices=[*SUITES, "all"])
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--trials", type=int)
    c.add_argument("--max-breakpoints", type=int, default=GeneratorConfig.max_breakpoints)
    c.add_argument("--denominator-bound", type=int, default=GeneratorConfig.denominator_bound)
    c.add_argument("--unit-mass", type=float, default=GeneratorConfig.unit_mass)
    c.add_argument("--endpoint-jump-mass", type=float, default=GeneratorConfig.endpoint_jump_mass)
    c.add_argument("--jsonl", action="store_true", help="JSON-lines report")
    c.add_argument("--witness-dir", help="write witnesses here as JSON files")
    c.set_defaults(run=cmd_check)

    x = sub.add_parser("counterexample", help="print an exact counterexample report")
    x.add_argument("which", choices=("q1", "q2"))
    x.set_defaults(run=cmd_counterexample)

    s = sub.add_parser("sample", help="CSV samples with one-sided limits at breakpoints")
    s.add_argument("function")
    s.add_argument("--points", type=int, default=101)
    s.add_argument("--precision", type=int, default=12, help="decimal digits (rendering only)")
    s.add_argument("--exact", action="store_true", help="print p/q instead of decimals")
    s.add_argument("--with-right", action="store_true", help="add a right-limit column")
    s.set_defaults(run=cmd_sample)

    r = sub.add_parser("replay", help="re-run a law on a stored witness")
    r.add_argument("witness")
    r.set_defaults(run=cmd_replay)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args, out)
    except (UsageError, ValueError) as exc:
        err.write(f"t2fuzzy: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
