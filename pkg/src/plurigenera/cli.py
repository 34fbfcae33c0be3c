"""Command-line entry point.

Basket specs are comma-separated ``mult*r/a`` items; ``r/a`` stands for the
singularity 1/r(a,-a,1). Example: ``3*2/1,2*5/3,1*10/7``.

Exit status: 0 on success, 1 on a usage error, 2 when ``verify-paper`` finds
a discrepancy.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from .basket import Basket, BasketSpecError, format_rational, parse_rational
from .bounds import BoundQuery, birationality_bound, parse_dimension
from .reid import GeometrySpec, build_table, plurigenus, solve_k3, table_to_csv, table_to_json
from .search import SearchProblem, enumerate_with_filters, solutions_to_json
from .verify import render_json, render_text, reproduce_all, summary_line

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISCREPANCY = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _basket(text: str) -> Basket:
    try:
        return Basket.parse(text)
    except BasketSpecError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _m_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if not sep or a > b:
        raise argparse.ArgumentTypeError(f"expected A..B with A <= B, got {text!r}")
    return range(a, b + 1)


def _int_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _dimension(text: str):
    try:
        return parse_dimension(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="plurigenera", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="regenerate the per-singularity nabla'/lambda' table")
    p.add_argument("--rmax", type=int, default=27)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("plurigenus", help="evaluate P_m by the plurigenus formula")
    p.add_argument("--k3", type=_rational, required=True)
    p.add_argument("--chi", type=int, default=1)
    p.add_argument("--basket", type=_basket, default=Basket())
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--m-range", type=_m_range, help="inclusive range A..B")

    p = sub.add_parser("solve-k3", help="solve for K^3 given one plurigenus")
    p.add_argument("--basket", type=_basket, default=Basket())
    p.add_argument("--chi", type=int, default=1)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pm", type=_rational, required=True)

    p = sub.add_parser("search", help="enumerate baskets whose vectors sum to a target")
    p.add_argument("--family", choices=("nabla", "lambda"), required=True)
    p.add_argument("--target", type=_int_vector, required=True)
    p.add_argument("--rmax", type=int, default=None, help="default 27 for nabla, 25 for lambda")
    p.add_argument("--filters", choices=("on", "off"), default="on")
    p.add_argument("--chi", type=int, default=1)
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = sub.add_parser("bound", help="birationality bound for pluricanonical maps")
    p.add_argument("--m0", type=int, required=True)
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--d", type=_dimension, default="unknown")
    p.add_argument("--ngamma", type=int, default=2)
    p.add_argument("--no-refine", action="store_true", help="ignore the m1-threshold refinements")

    p = sub.add_parser("verify-paper", help="reproduce every published computation")
    p.add_argument("--out", type=Path, help="write the full report (.json for JSON, text otherwise)")
    return parser


def _emit(text: str, out: Optional[Path], stdout: TextIO) -> None:
    if out is None:
        stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _cmd_table(args, stdout: TextIO) -> int:
    if args.rmax < 2:
        raise UsageError("--rmax must be >= 2")
    rows = build_table(args.rmax)
    _emit(table_to_csv(rows) if args.format == "csv" else table_to_json(rows), args.out, stdout)
    return EXIT_OK


def _cmd_plurigenus(args, stdout: TextIO) -> int:
    ms = [args.m] if args.m is not None else list(args.m_range)
    if min(ms) < 2:
        raise UsageError("--m/--m-range: the formula needs m >= 2")
    spec = GeometrySpec(args.k3, args.chi, args.basket)
    for m in ms:
        stdout.write(f"P{m} = {format_rational(plurigenus(spec, m))}\n")
    return EXIT_OK


def _cmd_solve_k3(args, stdout: TextIO) -> int:
    if args.m < 2:
        raise UsageError("--m: the formula needs m >= 2")
    stdout.write(format_rational(solve_k3(args.basket, args.chi, args.m, args.pm)) + "\n")
    return EXIT_OK


def _cmd_search(args, stdout: TextIO) -> int:
    rmax = args.rmax if args.rmax is not None else (27 if args.family == "nabla" else 25)
    if rmax < 2:
        raise UsageError("--rmax must be >= 2")
    if args.chi < 1:
        raise UsageError("--chi must be >= 1")
    try:
        problem = SearchProblem.from_table(args.family, args.target, rmax)
    except ValueError as exc:
        raise UsageError(f"--target: {exc}") from None
    annotated = enumerate_with_filters(problem, args.chi)
    if args.json:
        stdout.write(solutions_to_json(problem, annotated))
        return EXIT_OK
    stdout.write(f"{len(annotated)} solution(s) for {args.family} target {problem.target}, r <= {rmax}\n")
    for i, ann in enumerate(annotated, start=1):
        line = f"{i}: {ann.solution.basket.spec}"
        if args.filters == "on":
            line += (
                f"  l(2)={format_rational(ann.l2)} K^3={format_rational(ann.k3)}"
                f" miyaoka={format_rational(ann.miyaoka)}"
                f" {'eliminated: ' + ann.reason if ann.eliminated else 'viable'}"
            )
        stdout.write(line + "\n")
    return EXIT_OK


def _cmd_bound(args, stdout: TextIO) -> int:
    try:
        q = BoundQuery(args.m0, args.m1, args.d, args.ngamma)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    stdout.write(f"{birationality_bound(q, refine=not args.no_refine)}\n")
    return EXIT_OK


def _cmd_verify(args, stdout: TextIO) -> int:
    reports = reproduce_all()
    if args.out is not None:
        text = render_json(reports) if args.out.suffix == ".json" else render_text(reports)
        args.out.write_text(text, encoding="utf-8")
    stdout.write(summary_line(reports) + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_DISCREPANCY


COMMANDS = {
    "table": _cmd_table,
    "plurigenus": _cmd_plurigenus,
    "solve-k3": _cmd_solve_k3,
    "search": _cmd_search,
    "bound": _cmd_bound,
    "verify-paper": _cmd_verify,
}


def run(argv: Sequence[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        return COMMANDS[args.command](args, stdout)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
