"""``bipentropy`` command line: entropy, extremal, sweep, verify.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 infeasible instance.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from collections.abc import Iterable
from decimal import Context
from typing import TextIO

from .core import compare_h_counts, degree_counts, entropy, h_of_degrees
from .errors import DomainError, InconsistencyError, InfeasibleError, SizeGuardError, TableauParseError
from .indices import builtin_indices, ti_g
from .search import ExtremalRecord, brute_force_extremal, fast_extremal, summarize, sweep
from .tableau import YoungTableau
from .verify import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3

CSV_FIELDS = ["n", "m", "y", "q", "x", "r_low", "r_high", "h",
              "is_max_h", "is_min_r_low", "is_min_r_high"]

_H_CONTEXT = Context(prec=12)


def format_h(h: float) -> str:
    """Fixed-point rendering with 12 significant digits (0 stays "0")."""
    d = _H_CONTEXT.create_decimal_from_float(h)
    if not d:
        return "0"
    return f"{d:.{max(0, 11 - d.adjusted())}f}"


def write_records(records: Iterable[ExtremalRecord], fh: TextIO) -> int:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    count = 0
    for r in records:
        writer.writerow([r.n, r.m, r.y, r.q, r.x, r.r_low, r.r_high, format_h(r.h),
                         int(r.is_max_h), int(r.is_min_r_low), int(r.is_min_r_high)])
        count += 1
    return count


def read_records(fh: TextIO) -> list[ExtremalRecord]:
    reader = csv.DictReader(fh)
    if reader.fieldnames != CSV_FIELDS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    out = []
    for row in reader:
        ints = {k: int(row[k]) for k in CSV_FIELDS[:7]}
        flags = {k: row[k] == "1" for k in CSV_FIELDS[8:]}
        out.append(ExtremalRecord(**ints, h=float(row["h"]), **flags))
    return out


def _sweep_workers() -> int:
    raw = os.environ.get("SWEEP_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise DomainError(f"SWEEP_THREADS must be a positive integer, got {raw!r}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_entropy(args: argparse.Namespace) -> int:
    if args.degrees is not None:
        if args.tableau is not None:
            print("give either a tableau or --degrees, not both", file=sys.stderr)
            return EXIT_USAGE
        m = args.m if args.m is not None else sum(args.degrees) // 2
        print(f"m={m}")
        print(f"h={h_of_degrees(args.degrees)!r}")
        print(f"I={entropy(args.degrees, m)!r}")
        return EXIT_OK
    if args.tableau is None:
        print("a tableau literal or --degrees is required", file=sys.stderr)
        return EXIT_USAGE
    t = YoungTableau.parse(args.tableau)
    degrees = t.degrees()
    h = h_of_degrees(degrees)
    print(f"m={t.m}")
    print(f"h={h!r}")
    print(f"I={entropy(degrees, t.m)!r}")
    print(f"TI_{args.index}={ti_g(t, args.index)!r}")
    return EXIT_OK


def _print_records(records: list[ExtremalRecord]) -> None:
    print("  ".join(CSV_FIELDS))
    for r in records:
        print(f"{r.n} {r.m} {r.y} {r.q} {r.x} {r.r_low} {r.r_high} {format_h(r.h)} "
              f"{int(r.is_max_h)} {int(r.is_min_r_low)} {int(r.is_min_r_high)}")


def cmd_extremal(args: argparse.Namespace) -> int:
    best, records = fast_extremal(args.n, args.m)
    print(f"winner: B({best.n},{best.m},{best.y}) q={best.q} x={best.x} "
          f"r_low={best.r_low} r_high={best.r_high} h={format_h(best.h)} "
          f"tableau={best.shape.tableau if best.m <= 10**5 else '...'}")
    _print_records(records)
    if args.oracle:
        bf = brute_force_extremal(args.m, args.n)
        t = bf.witnesses[0]
        same = compare_h_counts(degree_counts(t.rows + t.columns), best.shape.degree_counts()) == 0
        print(f"oracle: {'agrees' if same else 'DISAGREES'} "
              f"(witnesses: {' '.join(str(w) for w in bf.witnesses)})")
        return EXIT_OK if same else EXIT_FAIL
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    records = list(sweep(args.max_n, workers=_sweep_workers()))
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        write_records(records, fh)
    summary = summarize(records)
    print(summary.line("per_record"))
    print(f"per (n,m) pair: {summary.line('per_pair')}")
    print(f"{len(records)} records written to {args.out}")
    return EXIT_OK


DEFAULT_LIMITS = {"thm11": 8, "lemma41": 12, "lemma42": 12, "thm43": 12,
                  "prop31": 8, "prop32": 8, "prop51": 7, "prop52": 10, "sigma": 60}


def cmd_verify(args: argparse.Namespace) -> int:
    limit = args.limit if args.limit is not None else DEFAULT_LIMITS[args.suite]
    report = SUITES[args.suite](limit)
    print(report)
    for v in report.violations[:20]:
        print(f"  {v}")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bipentropy",
                                     description="Degree-based entropy of bipartite graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", help="h, I and a topological index of one graph")
    p.add_argument("tableau", nargs="?", help='row lengths, e.g. "6,6,5,5"')
    p.add_argument("--degrees", type=_int_list, help="graph degree sequence instead of a tableau")
    p.add_argument("--m", type=int, help="number of edges (with --degrees)")
    p.add_argument("--index", choices=sorted(builtin_indices()), default="entropy")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("extremal", help="h-maximizing B(n,m,y) for one (n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("sweep", help="all (n, m) with n <= max-n, written as CSV")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TableauParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InfeasibleError, SizeGuardError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (DomainError, InconsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
