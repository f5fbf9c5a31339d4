"""Command line entry point.

Exit codes: 0 success or valid, 1 invalid certificate or internal
inconsistency, 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .complex import sphere_profiles
from .constructions import from_recipe
from .curvature import curvature_report
from .dimension import detect_dimension, dimension_value, validate_d_graph
from .errors import CurvError, DimensionTooSmall, ParamOutOfRange, ParseError, UnknownName


class UsageError(Exception):
    pass


def _load(args):
    if getattr(args, "gen", None):
        return from_recipe(args.gen)
    if args.input is None:
        raise UsageError("an input file (or '-' for stdin, or --gen RECIPE) is required")
    if args.input == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            data = Path(args.input).read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    return io.parse_graph(data)


def cmd_gen(args) -> int:
    g = from_recipe(args.recipe)
    if args.format == "json" or (args.format is None and args.output and args.output.endswith(".json")):
        text = io.format_graph_json(g)
    else:
        text = io.format_edge_list(g, comment=f"cliquecurv gen {args.recipe}")
    if args.output and args.output != "-":
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_analyze(args) -> int:
    if args.method == "euler-form" and args.dim is None:
        raise UsageError("--method euler-form requires --dim")
    g = _load(args)
    profiles = sphere_profiles(g)
    report = curvature_report(g, args.method, args.dim, profiles=profiles)
    if args.format == "tsv":
        sys.stdout.write(io.render_tsv(report, profiles))
    else:
        sys.stdout.write(io.render_report(report))
    if args.method == "general" and not report.gbc_holds:
        print("internal inconsistency: total curvature differs from Euler characteristic", file=sys.stderr)
        return 1
    return 0


def cmd_check_gbc(args) -> int:
    g = _load(args)
    report = curvature_report(g, "general")
    verdict = "true" if report.gbc_holds else "false"
    print(f"gbc {verdict} total={io.render_rational(report.total)} chi={report.euler_characteristic}")
    return 0 if report.gbc_holds else 1


def cmd_dim(args) -> int:
    g = _load(args)
    value = dimension_value(g, per_vertex=args.per_vertex)
    if args.format == "json":
        sys.stdout.write(io.render_report(value))
    elif args.per_vertex:
        for p, x in enumerate(value.per_vertex):
            print(f"{p}\t{io.render_rational(x)}")
    else:
        print(io.render_rational(value.value))
    return 0


def cmd_validate(args) -> int:
    if (args.dim is None) == (not args.detect):
        raise UsageError("give exactly one of --dim D or --detect")
    g = _load(args)
    if args.detect:
        d = detect_dimension(g, args.max)
        if d is None:
            print(f"no dimension <= {args.max} validates", file=sys.stderr)
            if args.format == "json":
                print('{"kind": "detect", "max": %d, "dimension": null}' % args.max)
            return 1
        cert = validate_d_graph(g, d)
    else:
        if args.dim < 0:
            raise UsageError("--dim must be non-negative")
        cert = validate_d_graph(g, args.dim)
    if args.format == "json":
        sys.stdout.write(io.render_report(cert))
    else:
        if cert.valid:
            print(f"valid {cert.claimed_d}-graph without boundary")
        else:
            print(f"invalid as a {cert.claimed_d}-graph ({len(cert.violations)} violations)")
            for v in cert.violations:
                print(f"  {v}")
    return 0 if cert.valid else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquecurv", description="Clique-complex curvature and dimension of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("input", nargs="?", help="graph file (edge list or JSON), '-' for stdin")
        p.add_argument("--gen", metavar="RECIPE", help="build the graph from a generator recipe instead")

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("recipe", help="generator recipe, e.g. cross:4, stellated-cube:5, er:12:0.5:42")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.add_argument("--format", choices=["text", "json"], default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="curvature report")
    graph_input(p)
    p.add_argument("--method", choices=["general", "euler-form"], default="general")
    p.add_argument("--dim", type=int)
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check-gbc", help="verdict-only Gauss-Bonnet check with the general curvature")
    graph_input(p)
    p.set_defaults(func=cmd_check_gbc)

    p = sub.add_parser("dim", help="inductive dimension")
    graph_input(p)
    p.add_argument("--per-vertex", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("validate", help="check the d-graph axioms")
    graph_input(p)
    p.add_argument("--dim", type=int)
    p.add_argument("--detect", action="store_true")
    p.add_argument("--max", type=int, default=10)
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, ParseError, ParamOutOfRange, UnknownName, DimensionTooSmall) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CurvError as exc:  # IndexOutOfRange, SelfLoop from the input
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
