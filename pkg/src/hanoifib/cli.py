"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .core_state import RESTRICTIONS, RuleSet, UnsupportedVariantError
from .graycode import gray_list
from .numeration import ZFWordError, canonical, zeckendorf, zf_value
from .solver import Solution, solve_iterative, solve_recursive
from .state_graph import DEFAULT_CAP, ResourceCapError, build_graph, export_dot
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _rules(args) -> RuleSet:
    family = args.family
    if args.pq is not None:
        if family not in (None, "pq"):
            raise UsageError("--pq only applies to --family pq")
        family = "pq"
    family = family or "fibonacci"
    if family == "pq" and args.pq is None:
        raise UsageError("--family pq needs --pq P Q")
    if family != "fibonacci" and args.style == "variant":
        raise UsageError("--style variant only applies to the fibonacci family")
    try:
        if family == "pq":
            return RuleSet.pq_rules(args.pq[0], args.pq[1], args.restrict)
        if family == "classical":
            return RuleSet.classical(args.restrict)
        return RuleSet.fibonacci(args.style, args.restrict)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _peg_lists(state) -> dict[str, list[int]]:
    return {name: sorted(disks) for name, disks in zip("ABC", state.pegs)}


def format_solution(sol: Solution, fmt: str) -> str:
    out = io.StringIO()
    if fmt == "text":
        out.write(f"0 start {sol.states[0]}\n")
        for i, (move, state) in enumerate(zip(sol.moves, sol.states[1:]), start=1):
            out.write(f"{i} {move} {state}\n")
    elif fmt == "json":
        for i, (move, state) in enumerate(zip(sol.moves, sol.states[1:]), start=1):
            record = {"index": i, "kind": move.kind, "k": move.k, "from": move.src_x.name,
                      "to": move.dst.name, "state_after": _peg_lists(state)}
            out.write(json.dumps(record) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["index", "kind", "k", "from", "to", "A", "B", "C"])
        for i, (move, state) in enumerate(zip(sol.moves, sol.states[1:]), start=1):
            pegs = _peg_lists(state)
            writer.writerow([i, move.kind, move.k, move.src_x.name, move.dst.name,
                             *(" ".join(map(str, pegs[p])) for p in "ABC")])
    else:
        raise UsageError(f"solve does not support --format {fmt}")
    return out.getvalue()


def cmd_solve(args) -> int:
    if args.n < 0:
        raise UsageError("-n must be >= 0")
    rules = _rules(args)
    try:
        if args.algorithm == "iterative":
            if rules.family != "fibonacci" or not rules.unrestricted:
                raise UsageError("--algorithm iterative needs --family fibonacci without restriction")
            sol = solve_iterative(args.n, rules)
        else:
            sol = solve_recursive(args.n, rules)
    except UnsupportedVariantError as exc:
        raise UsageError(str(exc)) from exc
    sys.stdout.write(format_solution(sol, args.format))
    return EXIT_OK


def cmd_gray(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    words = gray_list(args.n, method=args.method)
    if args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["index", "word"])
        for i, w in enumerate(words, start=1):
            writer.writerow([i, w])
        sys.stdout.write(out.getvalue())
    else:
        sys.stdout.write("".join(w + "\n" for w in words))
    return EXIT_OK


def cmd_zeckendorf(args) -> int:
    if args.inverse is not None:
        try:
            print(zf_value(canonical(args.inverse)))
        except ZFWordError as exc:
            raise UsageError(str(exc)) from exc
        return EXIT_OK
    if args.k is None or args.k < 0:
        raise UsageError("give a non-negative integer or --inverse WORD")
    print(zeckendorf(args.k))
    return EXIT_OK


def cmd_graph(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    rules = _rules(args)
    g = build_graph(args.n, rules, cap=args.cap)
    sys.stdout.write(export_dot(g, with_coords=args.coords))
    return EXIT_OK


def cmd_verify(args) -> int:
    bounds = {}
    if args.max_n is not None:
        bounds["max_n"] = args.max_n
    if args.max_len is not None:
        bounds["max_len"] = args.max_len
    reports = run_suite(args.suite, bounds)
    for r in reports:
        print(r.to_line())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _add_rule_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["classical", "fibonacci", "pq"], default=None)
    p.add_argument("--style", choices=["original", "variant"], default="original")
    p.add_argument("--pq", nargs=2, type=int, metavar=("P", "Q"), default=None)
    p.add_argument("--restrict", choices=sorted(RESTRICTIONS), default="none")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hanoifib",
                                     description="Tower of Hanoi-Fibonacci toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="print an optimal solution")
    p.add_argument("-n", "--n", type=int, default=0)
    _add_rule_flags(p)
    p.add_argument("--algorithm", choices=["recursive", "iterative"], default="recursive")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gray", help="print the Gray-like code on ZF-words")
    p.add_argument("-n", "--n", type=int, required=True)
    p.add_argument("--method", choices=["mirror", "demirror"], default="mirror")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_gray)

    p = sub.add_parser("zeckendorf", help="Zeckendorf expansion of an integer, or its inverse")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("--inverse", metavar="WORD")
    p.set_defaults(func=cmd_zeckendorf)

    p = sub.add_parser("graph", help="export the state graph as DOT")
    p.add_argument("-n", "--n", type=int, required=True)
    _add_rule_flags(p)
    p.add_argument("--format", choices=["dot"], default="dot")
    p.add_argument("--coords", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=["all", *SUITES], default="all")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except ResourceCapError as exc:
        print(f"hanoifib: {exc}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
