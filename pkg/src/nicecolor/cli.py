"""Command-line interface.

Subcommands::

    check      --colors C [--fair-only] FILE   predicates + colorability verdict
    color      --colors C [--partial] FILE     print a nice coloring or NONE
    schedule   [--json] FILE                   presentation schedule or reason
    hypergraph {to|from} FILE                  convert between the two formats
    gen        --n N --m M [--k K] [--seed S] [--special]   emit an instance

Exit codes: 0 success (colorable / fair / feasible), 1 negative verdict,
2 malformed input.  Output is byte-identical across runs for identical
inputs and seeds.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .core import (
    TupleSet,
    is_c_fair,
    is_special,
    parse_instance,
    render_instance,
)
from .general import solve_general, solve_partial_bounded
from .generators import random_instance
from .hypergraph import (
    from_hypergraph,
    infer_k,
    parse_hypergraph,
    render_hypergraph,
    to_hypergraph,
)
from .scheduler import (
    feasible,
    make_schedule,
    parse_portfolios,
    render_schedule_text,
    schedule_to_json,
)
from .triple2 import color_2_triples, decide_2colorable_triples

COLOR_NAMES_2 = ("red", "blue")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _is_colorable(ts: TupleSet, c: int) -> bool:
    if c == 2 and ts.k == 3:
        return decide_2colorable_triples(ts)
    return solve_general(ts, c) is not None


def _cmd_check(args: argparse.Namespace) -> int:
    ts = parse_instance(_read(args.file)).tuple_set
    fair = is_c_fair(ts, args.colors)
    tokens = ["FAIR" if fair else "NOT-FAIR"]
    if args.fair_only:
        print(tokens[0])
        return 0 if fair else 1
    if ts.k == 3:
        tokens.append("SPECIAL" if is_special(ts) else "NOT-SPECIAL")
    colorable = _is_colorable(ts, args.colors)
    tokens.append("COLORABLE" if colorable else "NOT-COLORABLE")
    print(" ".join(tokens))
    return 0 if colorable else 1


def _cmd_color(args: argparse.Namespace) -> int:
    ts = parse_instance(_read(args.file)).tuple_set
    c = args.colors
    if args.partial:
        col = solve_partial_bounded(ts, c)
    elif c == 2 and ts.k == 3:
        col = color_2_triples(ts)
    else:
        col = solve_general(ts, c)
    if col is None:
        print("NONE")
        return 1
    lines = []
    for idx in sorted(col.assignment):
        value = col.assignment[idx]
        name = COLOR_NAMES_2[value] if c == 2 else str(value)
        lines.append(f"{idx} {name}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_schedule(args: argparse.Namespace) -> int:
    portfolios = parse_portfolios(_read(args.file))
    verdict = feasible(portfolios)
    if not verdict:
        print(f"INFEASIBLE: {verdict.reason}")
        return 1
    schedule = make_schedule(portfolios)
    assert schedule is not None
    out = schedule_to_json(schedule) if args.json else render_schedule_text(schedule)
    sys.stdout.write(out)
    return 0


def _cmd_hypergraph(args: argparse.Namespace) -> int:
    text = _read(args.file)
    if args.direction == "to":
        norm = parse_instance(text)
        sys.stdout.write(render_hypergraph(to_hypergraph(norm.tuple_set)))
    else:
        h = parse_hypergraph(text)
        ts = from_hypergraph(h, infer_k(h))
        sys.stdout.write(render_instance(ts))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    ts = random_instance(args.n, args.m, k=args.k, seed=args.seed, special=args.special)
    sys.stdout.write(render_instance(ts))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nicecolor",
        description="Nice colorings of tuple multisets, with a scheduling application.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="report fairness, speciality, and colorability")
    p_check.add_argument("--colors", type=int, required=True, metavar="C")
    p_check.add_argument("--fair-only", action="store_true",
                         help="print and judge only the fairness predicate")
    p_check.add_argument("file", help="instance file, or - for stdin")
    p_check.set_defaults(func=_cmd_check)

    p_color = sub.add_parser("color", help="print a nice coloring, or NONE")
    p_color.add_argument("--colors", type=int, required=True, metavar="C")
    p_color.add_argument("--partial", action="store_true",
                         help="print a partial coloring using each color at most k+1 times")
    p_color.add_argument("file", help="instance file, or - for stdin")
    p_color.set_defaults(func=_cmd_color)

    p_sched = sub.add_parser("schedule", help="schedule team presentations in groups")
    p_sched.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p_sched.add_argument("file", help="portfolio file, or - for stdin")
    p_sched.set_defaults(func=_cmd_schedule)

    p_hyper = sub.add_parser("hypergraph", help="convert instances to/from hypergraph form")
    p_hyper.add_argument("direction", choices=("to", "from"))
    p_hyper.add_argument("file", help="input file, or - for stdin")
    p_hyper.set_defaults(func=_cmd_hypergraph)

    p_gen = sub.add_parser("gen", help="emit a random or special-pattern instance")
    p_gen.add_argument("--n", type=int, required=True, help="number of tuples")
    p_gen.add_argument("--m", type=int, required=True, help="alphabet size to draw from")
    p_gen.add_argument("--k", type=int, default=3, help="tuple size (default 3)")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--special", action="store_true",
                       help="emit the repeated-triple special pattern")
    p_gen.set_defaults(func=_cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
