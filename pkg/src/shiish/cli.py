"""Command-line front end: enumeration, classification, burning, verification.

Exit codes are a stable contract: 0 success, 1 usage error, 2 budget
refusal, 3 verification failure.  Identical invocations write byte-identical
files; nothing time- or host-dependent goes into an output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .arrangement import (
    DEFAULT_REGION_MAX_N,
    build_arrangement,
    enumerate_regions,
    region_record,
)
from .core import BudgetError, Word
from .graphs import build_gkn, build_rooted, dfs_burn, graph_to_dot, rooted_to_dot
from .parking import classification_report
from .verify import count_sweep, cross_validate, reproduce_tables

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VERIFY_FAILED = 3

ENV_MAX_N = "SHIISH_MAX_N"


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports usage problems with exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _region_budget() -> int:
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return DEFAULT_REGION_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_N}={raw!r} is not an integer")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _parse_ks(raw: str, n: int) -> list[int]:
    if raw == "all":
        return list(range(2, n + 1))
    k = int(raw)
    if not 2 <= k <= n:
        raise ValueError(f"k={k} outside [2, {n}]")
    return [k]


def cmd_regions(args) -> int:
    try:
        budget = _region_budget()
        if args.n > budget:
            print(
                f"refused: n={args.n} exceeds the region budget {budget} "
                f"(set {ENV_MAX_N} to override)",
                file=sys.stderr,
            )
            return EXIT_BUDGET
        spec = build_arrangement(args.n, args.k)
        pairs = enumerate_regions(spec, max_n=max(budget, args.n))
    except BudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        records = [region_record(spec, region, label) for region, label in pairs]
        _emit(_dump_json(records), args.out)
    elif args.format == "csv":
        rows = [",".join(map(str, label.entries)) for _, label in pairs]
        _emit("\n".join(rows) + "\n", args.out)
    else:  # text
        lines = []
        for region, label in pairs:
            record = region_record(spec, region, label)
            lines.append(
                f"{record['signs']}  w={''.join(map(str, record['w']))}  label={label}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        word = Word.parse(args.word)
        ks = _parse_ks(args.k, word.n)
        report = classification_report(word, ks)
        if args.trace:
            report["burn"] = {
                str(k): dfs_burn(build_rooted(word.n, k), word).to_json() for k in ks
            }
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(_dump_json(report), args.out)
    return EXIT_OK


def cmd_burn(args) -> int:
    try:
        word = Word.parse(args.word)
        ks = _parse_ks(args.k, word.n)
        payload = {
            str(k): dfs_burn(build_rooted(word.n, k), word).to_json() for k in ks
        }
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(_dump_json(payload), args.out)
    return EXIT_OK


def cmd_graph(args) -> int:
    try:
        if args.rooted:
            text = rooted_to_dot(build_rooted(args.n, args.k))
        else:
            text = graph_to_dot(build_gkn(args.n, args.k))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cells = []
        for n in range(2, args.n_max + 1):
            for k in range(2, n + 1):
                cells.append(cross_validate(n, k, workers=args.workers).to_json())
        tables = reproduce_tables()
        counts = count_sweep(min(args.n_max, 6), regions_max_n=min(args.n_max, 5))
    except BudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    passed = all(c["pass"] for c in cells) and tables["pass"] and counts["pass"]
    merged = {"cells": cells, "tables": tables, "counts": counts, "pass": passed}
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(_dump_json(merged))
    for cell in cells:
        status = "pass" if cell["pass"] else "FAIL"
        counted = ", ".join(f"{name}={num}" for name, num in sorted(cell["counts"].items()))
        print(f"(n={cell['n']}, k={cell['k']}) {status}  {counted}")
    print(f"worked examples: {'pass' if tables['pass'] else 'FAIL'}")
    print(f"count laws: {'pass' if counts['pass'] else 'FAIL'}")
    print(f"overall: {'pass' if passed else 'FAIL'}")
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def cmd_count(args) -> int:
    try:
        sweep = count_sweep(args.n_max, regions_max_n=min(args.n_max, 5))
    except BudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.format == "json":
        _emit(_dump_json(sweep), args.out)
        return EXIT_OK
    lines = [f"{'n':>3} {'k':>3} {'regions':>8} {'tail formula':>13} {'tail brute':>11} ok"]
    for cell in sweep["cells"]:
        regions = "-" if cell["regions"] is None else str(cell["regions"])
        ok = "yes" if cell["regions_match"] and cell["tail_parkers_match"] else "NO"
        lines.append(
            f"{cell['n']:>3} {cell['k']:>3} {regions:>8} "
            f"{cell['tail_parkers_formula']:>13} {cell['tail_parkers_brute']:>11} {ok}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shiish", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_regions = sub.add_parser("regions", help="enumerate the regions of one arrangement")
    p_regions.add_argument("--n", type=int, required=True)
    p_regions.add_argument("--k", type=int, required=True)
    p_regions.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p_regions.add_argument("--out", default=None)
    p_regions.set_defaults(func=cmd_regions)

    p_check = sub.add_parser("check", help="classify one word")
    p_check.add_argument("word")
    p_check.add_argument("--k", default="all", help="a single k or 'all'")
    p_check.add_argument("--trace", action="store_true", help="include burn traces")
    p_check.add_argument("--out", default=None)
    p_check.set_defaults(func=cmd_check)

    p_burn = sub.add_parser("burn", help="run the burning algorithm on one word")
    p_burn.add_argument("word")
    p_burn.add_argument("--k", default="all", help="a single k or 'all'")
    p_burn.add_argument("--out", default=None)
    p_burn.set_defaults(func=cmd_burn)

    p_graph = sub.add_parser("graph", help="DOT export of the (rooted) multigraph")
    p_graph.add_argument("--n", type=int, required=True)
    p_graph.add_argument("--k", type=int, required=True)
    p_graph.add_argument("--rooted", action="store_true")
    p_graph.add_argument("--out", default=None)
    p_graph.set_defaults(func=cmd_graph)

    p_verify = sub.add_parser("verify", help="cross-validate all characterizations")
    p_verify.add_argument("--n-max", type=int, default=4)
    p_verify.add_argument("--json", default=None, help="write the merged JSON report here")
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    p_count = sub.add_parser("count", help="region and tail-parker count table")
    p_count.add_argument("--n-max", type=int, default=5)
    p_count.add_argument("--format", choices=("text", "json"), default="text")
    p_count.add_argument("--out", default=None)
    p_count.set_defaults(func=cmd_count)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
