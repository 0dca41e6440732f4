"""Command-line entry point: ``seq``, ``verify`` and ``bijection`` subcommands."""
from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Callable, Sequence

from . import identities
from .bijections import verify_bijection
from .partitions import (
    count_no_ones,
    count_smallest_at_least,
    count_smallest_exactly_once,
    p_fixed_diff_dp,
    partition_numbers,
)

DEFAULT_ORDER = 100
DEFAULT_ENUM_LIMIT = 40
STATS = ("p", "a", "c", "d", "p2n_n", "a_m")
TARGETS = (
    "formula1", "formula2", "chain", "heine", "cauchy", "gm",
    "bijection-phi", "bijection-psi", "all",
)
# per-target default for --max-n
DEFAULT_MAX_N = {
    "formula2": 18, "gm": 30, "bijection-phi": 30, "bijection-psi": 18,
}


class UsageError(Exception):
    pass


def _emit(rows: Sequence[Sequence[object]], header: Sequence[str], fmt: str, out) -> None:
    if fmt == "bfile":
        for row in rows:
            out.write(" ".join(str(x) for x in row[:2]) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        cells = [list(map(str, header))] + [[str(x) for x in r] for r in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        for r in cells:
            out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def seq_values(stat: str, n_max: int, m: int | None = None, enum_limit: int = DEFAULT_ENUM_LIMIT) -> list[int]:
    """Values of one statistic for ``n = 1..n_max``."""
    if stat not in STATS:
        raise UsageError(f"unknown statistic {stat!r}")
    if (stat == "a_m") != (m is not None):
        raise UsageError("--m is required for a_m and only for a_m")
    if n_max < 1:
        raise UsageError("--max-n must be >= 1")
    if stat == "p":
        return partition_numbers(n_max)[1:]
    if stat == "p2n_n":
        return [p_fixed_diff_dp(2 * n, n) for n in range(1, n_max + 1)]
    if n_max > enum_limit:
        raise UsageError(f"{stat} is enumeration-backed; --max-n {n_max} exceeds --enum-limit {enum_limit}")
    fn: Callable[[int], int] = {
        "a": lambda n: count_smallest_at_least(n, 2),
        "c": count_smallest_exactly_once,
        "d": count_no_ones,
        "a_m": lambda n: count_smallest_at_least(n, m),
    }[stat]
    return [fn(n) for n in range(1, n_max + 1)]


def cmd_seq(args: argparse.Namespace, out) -> int:
    values = seq_values(args.stat, args.max_n, args.m, args.enum_limit)
    name = f"a_{args.m}" if args.stat == "a_m" else args.stat
    _emit([(n, v) for n, v in enumerate(values, start=1)], ("n", name), args.format, out)
    return 0


def _run_target(target: str, args: argparse.Namespace) -> list[identities.VerificationSummary]:
    order = args.order
    max_n = args.max_n if args.max_n is not None else DEFAULT_MAX_N.get(target)
    if target == "formula1":
        if args.max_n is None:
            enum_n, max_n = 40, 200
        else:
            enum_n = min(max_n, args.enum_limit)
            if enum_n < max_n:
                print(f"note: enumeration mode capped at n={enum_n}", file=sys.stderr)
        return [
            identities.verify_formula1(enum_n, "enumeration"),
            identities.verify_formula1(max_n, "series"),
            identities.verify_formula1(max_n, "closed_form"),
        ]
    if target == "formula2":
        return [identities.verify_formula2(max_n), identities.verify_formula2(max_n, fast=True)]
    if target == "chain":
        return [identities.chain_summary(order)]
    if target == "heine":
        return [identities.verify_heine_specialization(order)]
    if target == "cauchy":
        return [identities.verify_cauchy_specializations(order)]
    if target == "gm":
        m_max = args.m if args.m is not None else 5
        return [identities.verify_gm(m_max, max_n, max(order, max_n))]
    if target.startswith("bijection-"):
        which = target.split("-", 1)[1]
        s = identities.VerificationSummary(f"bijection {which}", (1, max_n))
        for n in range(1, max_n + 1):
            rep = verify_bijection(which, n)
            s.compare(n, rep.source_size, rep.target_size, "|source| = |target|")
            s.compare(n, int(rep.passed), 1, "; ".join(rep.errors) or "round trip / image")
        return [s]
    raise UsageError(f"unknown target {target!r}")


def cmd_verify(args: argparse.Namespace, out) -> int:
    targets = [t for t in TARGETS if t != "all"] if args.target == "all" else [args.target]
    summaries = []
    for t in targets:
        summaries.extend(_run_target(t, args))
    ok = all(s.passed for s in summaries)
    if args.format == "table":
        if args.target == "chain":
            for rep in identities.verify_chain(args.order):
                tail = "" if rep.equal_to_next is None else (
                    "  = next" if rep.equal_to_next else f"  != next at q^{rep.first_mismatch}"
                )
                head = rep.coeffs[1 - rep.lowest_exp :][:12]
                out.write(f"{rep.stage_id.value}: q^1.. {head}...{tail}\n")
        for s in summaries:
            out.write(str(s) + "\n")
        out.write(f"{'PASS' if ok else 'FAIL'}: {sum(s.passed for s in summaries)}/{len(summaries)} checks\n")
    else:
        rows = [(i, int(s.passed), s.identity, s.n_range[0], s.n_range[1], len(s.mismatches))
                for i, s in enumerate(summaries, start=1)]
        _emit(rows, ("index", "pass", "check", "lo", "hi", "mismatches"), args.format, out)
    return 0 if ok else 1


def cmd_bijection(args: argparse.Namespace, out) -> int:
    rep = verify_bijection(args.which, args.n)
    if args.format == "table":
        for t in rep.traces:
            mark = "" if t.round_trip_ok else "  (round trip FAILED)"
            out.write(f"{t.source} ↦ {t.image}{mark}\n")
        for err in rep.errors:
            out.write(f"error: {err}\n")
        out.write(rep.summary() + "\n")
    else:
        rows = [(str(t.source), str(t.image), int(t.round_trip_ok)) for t in rep.traces]
        _emit(rows, ("source", "image", "round_trip_ok"), args.format, out)
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-identities",
        description="Smallest-part partition statistics and checks of their identities.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("table", "csv", "bfile"), default="table")
    fmt.add_argument("--enum-limit", type=int, default=DEFAULT_ENUM_LIMIT,
                     help="largest n for enumeration-backed computations")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", parents=[fmt], help="print a sequence for n = 1..max-n")
    s.add_argument("stat", choices=STATS)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--m", type=int)
    s.set_defaults(func=cmd_seq)

    v = sub.add_parser("verify", parents=[fmt], help="check an identity; exit 1 on any failure")
    v.add_argument("target", choices=TARGETS)
    v.add_argument("--max-n", type=int)
    v.add_argument("--order", type=int, default=DEFAULT_ORDER)
    v.add_argument("--m", type=int, help="largest multiplicity for gm (default 5)")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bijection", parents=[fmt], help="list a bijection on one n")
    b.add_argument("which", choices=("phi", "psi"))
    b.add_argument("--n", type=int, required=True)
    b.set_defaults(func=cmd_bijection)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    if out is None:
        out = sys.stdout
        if isinstance(out, io.TextIOWrapper):
            out.reconfigure(encoding="utf-8")
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
