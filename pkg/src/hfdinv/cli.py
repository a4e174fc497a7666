"""Command-line entry point: ``hfdinv {alex,dinv,obstruct,scan,verify}``.

Exit codes: 0 success, 1 usage error, 2 validation error, 3 verify failure.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import json
import re
import sys
from collections import Counter

from .dinv import Slope, integral_table, table
from .exactmath import format_rational
from .knots import KnotModel, ValidationError, from_polynomial, pretzel
from .laurent import ParseError
from .obstruction import verdict_from_table
from .scan import FAMILIES, ScanConfig, run_scan
from .verify import CHECKS, Ranges, run_checks

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    lo, hi = int(m[1]), int(m[2])
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _named_range(text: str) -> tuple[str, tuple[int, int]]:
    var, sep, rest = text.partition("=")
    if not sep or var.strip() not in ("q", "p"):
        raise argparse.ArgumentTypeError(f"expected q=LO..HI or p=LO..HI, got {text!r}")
    return var.strip(), _range(rest)


def _add_knot_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--pretzel", type=int, metavar="Q", help="use P(-2,3,2Q+1)")
    g.add_argument("--alexander", metavar="STR", help="symmetrized Alexander polynomial, e.g. 't - 1 + t^-1'")
    p.add_argument("--label", help="name for an --alexander knot (default: custom)")


def _add_common(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    p.add_argument("--format", choices=formats, help=f"output format (default {formats[0]})")
    p.add_argument("--config", metavar="FILE", help="flat key = value file; command-line flags win")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hfdinv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("alex", help="Alexander polynomial, genus, torsion and V sequences")
    _add_knot_flags(p)
    _add_common(p, ("text", "json"))

    p = sub.add_parser("dinv", help="d-invariant table of a positive surgery")
    _add_knot_flags(p)
    p.add_argument("--slope", metavar="G[/H]")
    p.add_argument("--indexing", choices=("rational", "integral"),
                   help="spin^c labels 0..g-1 (default) or -n/2 < i <= n/2 (integral slopes only)")
    _add_common(p, ("text", "csv", "json"))

    p = sub.add_parser("obstruct", help="decide the weak-filling obstruction")
    _add_knot_flags(p)
    p.add_argument("--slope", metavar="G[/H]")
    _add_common(p, ("text", "json", "csv"))

    p = sub.add_parser("scan", help="sweep a family of surgeries")
    _add_knot_flags(p)
    p.add_argument("--family", choices=sorted(FAMILIES))
    p.add_argument("--range", type=_range, metavar="LO..HI",
                   help="values of the sweep variable (q, p, or n for custom)")
    p.add_argument("--slope-expr", metavar="EXPR",
                   help="slope as an expression in the sweep variable, e.g. '(10*p+1)/p'")
    p.add_argument("--jobs", type=int, metavar="N")
    p.add_argument("--only-squarefree", action="store_const", const=True)
    p.add_argument("--only-lspace", action="store_const", const=True)
    _add_common(p, ("csv", "json", "text"))

    p = sub.add_parser("verify", help="run the built-in reproduction checks")
    p.add_argument("--only", action="append", metavar="NAME",
                   help="run just this check (repeatable); see --list")
    p.add_argument("--range", action="append", type=_named_range, metavar="VAR=LO..HI",
                   help="narrow the q or p sweep, e.g. q=4..20")
    p.add_argument("--list", action="store_true", help="list check names and exit")
    return parser


_CONFIG_TYPES = {"pretzel": int, "jobs": int, "range": _range,
                 "only_squarefree": "bool", "only_lspace": "bool"}


def _apply_config(args: argparse.Namespace) -> None:
    path = getattr(args, "config", None)
    if not path:
        return
    cp = configparser.ConfigParser(interpolation=None)
    try:
        with open(path) as fh:
            cp.read_string("[config]\n" + fh.read())
    except (OSError, configparser.Error) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for key, raw in cp["config"].items():
        attr = key.replace("-", "_")
        if attr in ("config", "command") or not hasattr(args, attr):
            raise UsageError(f"config key {key!r} is not a flag of '{args.command}'")
        if getattr(args, attr) is not None:
            continue  # command line wins
        kind = _CONFIG_TYPES.get(attr, str)
        try:
            if kind == "bool":
                value = cp["config"].getboolean(key)
            else:
                value = kind(raw)
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise UsageError(f"config key {key!r}: {exc}") from None
        setattr(args, attr, value)
    if getattr(args, "pretzel", None) is not None and getattr(args, "alexander", None) is not None:
        raise UsageError("--pretzel and --alexander are mutually exclusive")


def _knot(args) -> KnotModel:
    if args.pretzel is not None:
        return pretzel(args.pretzel)
    if args.alexander is not None:
        return from_polynomial(args.label or "custom", args.alexander)
    raise UsageError("give --pretzel Q or --alexander STR")


def _slope(args) -> Slope:
    if args.slope is None:
        raise UsageError("--slope is required")
    try:
        return Slope.parse(args.slope)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"bad slope {args.slope!r}: {exc}") from None


def cmd_alex(args, out) -> int:
    K = _knot(args)
    tors, vs = K.torsion_sequence(), K.v_sequence()
    if (args.format or "text") == "json":
        json.dump({"knot": K.label, "alexander": str(K.alexander), "genus": K.genus,
                   "torsion": list(tors), "V": list(vs)}, out, indent=2)
        out.write("\n")
    else:
        out.write(f"knot:      {K.label}\n")
        out.write(f"alexander: {K.alexander}\n")
        out.write(f"genus:     {K.genus}\n")
        out.write(f"torsion:   {' '.join(map(str, tors))}\n")
        out.write(f"V:         {' '.join(map(str, vs))}\n")
    return EXIT_OK


def cmd_dinv(args, out) -> int:
    K, slope = _knot(args), _slope(args)
    tab = table(K, slope)
    entries = tab.entries
    if slope.h == 1:
        integral = integral_table(K, slope.g)
        if Counter(d for _, d in integral) != Counter(tab.values):
            raise RuntimeError("integral and rational surgery formulas disagree")
        if args.indexing == "integral":
            entries = integral
    elif args.indexing == "integral":
        raise UsageError("--indexing integral needs an integral slope")
    fmt = args.format or "text"
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["index", "d_num", "d_den"])
        w.writerows([i, d.numerator, d.denominator] for i, d in entries)
        print(f"max d = {format_rational(tab.max_d)}, max 4d = {format_rational(tab.max4d)}",
              file=sys.stderr)
    elif fmt == "json":
        doc = tab.to_dict()
        doc["indexing"] = args.indexing or "rational"
        doc["entries"] = [{"index": i, "d": format_rational(d, always_fraction=True)}
                          for i, d in entries]
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        out.write(f"# d-invariants of {slope}-surgery on {K.label}\n")
        for i, d in entries:
            out.write(f"{i:>6}  {format_rational(d)}\n")
        out.write(f"max d = {format_rational(tab.max_d)}, max 4d = {format_rational(tab.max4d)}\n")
    return EXIT_OK


def cmd_obstruct(args, out) -> int:
    K, slope = _knot(args), _slope(args)
    v = verdict_from_table(K, table(K, slope))
    fmt = args.format or "text"
    if fmt == "json":
        json.dump(v.to_dict(), out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        d = v.to_dict()
        d["squarefree"] = str(d["squarefree"]).lower()
        d["lspace"] = str(d["lspace"]).lower()
        cols = ["knot", "slope", "delta", "squarefree", "lspace", "max4d", "threshold", "conclusion"]
        w = csv.writer(out, lineterminator="\n")
        w.writerow(cols)
        w.writerow([d[c] for c in cols])
    else:
        out.write(v.explain() + "\n")
    return EXIT_OK


def cmd_scan(args, out) -> int:
    if args.family is None:
        raise UsageError("--family is required")
    if args.range is None:
        raise UsageError("--range LO..HI is required")
    try:
        config = ScanConfig(
            family=args.family, lo=args.range[0], hi=args.range[1],
            slope_expr=args.slope_expr, pretzel_q=args.pretzel, alexander=args.alexander,
            label=args.label, fmt=args.format or "csv", jobs=args.jobs or 1,
            only_squarefree=bool(args.only_squarefree), only_lspace=bool(args.only_lspace),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    run_scan(config, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.list:
        for c in CHECKS:
            out.write(f"{c.name:<24} {c.description}\n")
        return EXIT_OK
    ranges = Ranges()
    for var, bounds in args.range or ():
        setattr(ranges, var, bounds)
    try:
        ok = run_checks(args.only, ranges, out=lambda line: out.write(line + "\n"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {"alex": cmd_alex, "dinv": cmd_dinv, "obstruct": cmd_obstruct,
            "scan": cmd_scan, "verify": cmd_verify}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        _apply_config(args)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"hfdinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValidationError, ParseError) as exc:
        print(f"hfdinv: invalid knot: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"hfdinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
