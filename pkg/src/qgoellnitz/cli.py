"""Command-line front end.

Exit status: 0 when every check passed, 1 on a mismatch (the counterexample
is printed), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable

from . import classical, colored, identities
from .colored import FreqVector
from .report import VerificationReport


def _verifiers() -> dict[str, Callable[[argparse.Namespace], VerificationReport]]:
    def bound(args, default):
        return default if args.ijkl_max is None else args.ijkl_max

    def degree(args, default):
        return default if args.degree is None else args.degree

    def nmax(args, default):
        return default if args.nmax is None else args.nmax

    def lm(args, default):
        return default if args.lm_max is None else args.lm_max

    return {
        "key26": lambda a: identities.verify_key_identity(
            bound(a, 3), degree(a, 40), jobs=a.jobs),
        "goellnitz32": lambda a: identities.verify_goellnitz_identity(
            bound(a, 5), degree(a, 50), jobs=a.jobs),
        "schur33": lambda a: identities.verify_schur_identity(bound(a, 8), degree(a, 60)),
        "bounded43": lambda a: identities.verify_bounded_schur(lm(a, 8), a.ijkl_max),
        "bounded44": lambda a: identities.verify_bounded_goellnitz(lm(a, 6), a.ijkl_max),
        "limit": lambda a: identities.bounded_limit_check(
            lm(a, 30), lm(a, 30), degree(a, 25), bound(a, 3)),
        "product41": lambda a: identities.full_product_check(degree(a, 30)),
        "reduction": lambda a: identities.reduction_check(bound(a, 3), degree(a, 40)),
        "slices": lambda a: identities.slice_check(bound(a, 3), degree(a, 40)),
        "threeway": lambda a: identities.three_way_check(bound(a, 3), nmax(a, 30)),
        "dilation": lambda a: identities.theorem1_genfunc_check(degree(a, 150)),
        "thm1": lambda a: classical.verify_theorem1(nmax(a, 300)),
        "thm1-refined": lambda a: classical.verify_theorem1_refined(nmax(a, 120)),
        "thmG": lambda a: classical.verify_theorem_g(nmax(a, 150)),
        "thm2": lambda a: colored.verify_theorem2(nmax(a, 25), bound(a, 3)),
        "thmA": lambda a: colored.verify_theorem_a(nmax(a, 25), bound(a, 3)),
        "order": lambda a: classical.order_isomorphism_check(a.count),
        "transport15": lambda a: classical.verify_transport_15(nmax(a, 120)),
        "transport6": lambda a: classical.verify_transport_6(nmax(a, 100)),
    }


VERIFY_NAMES = tuple(_verifiers())


def format_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "cells_checked", "status", "counterexample"])
        ce = report.counterexample
        writer.writerow([report.identity, report.cells_checked, report.status,
                         json.dumps(ce.to_dict(), sort_keys=True) if ce else ""])
        return buf.getvalue().rstrip("\n")
    return report.line()


def table_rows(which: str, n_max: int) -> list[dict[str, int]]:
    if which == "thm1":
        p, g = classical.p1_vector(n_max), classical.g1_vector(n_max)
    elif which == "thmG":
        p, g = classical.pg_vector(n_max), classical.gg_vector(n_max)
    else:
        raise ValueError(f"unknown table {which!r}")
    return [{"n": n, "P": p[n], "G": g[n]} for n in range(n_max + 1)]


def format_table(rows: list[dict[str, int]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["n", "P", "G"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    width = max(len(str(r["P"])) for r in rows) if rows else 1
    return "\n".join(f"{r['n']:>5} {r['P']:>{width}} {r['G']:>{width}}" for r in rows)


def parse_table(text: str, fmt: str) -> list[dict[str, int]]:
    """Inverse of :func:`format_table` for the json and csv formats."""
    if fmt == "json":
        return [{k: int(v) for k, v in row.items()} for row in json.loads(text)]
    if fmt == "csv":
        return [{k: int(v) for k, v in row.items()} for row in csv.DictReader(io.StringIO(text))]
    raise ValueError("only json and csv tables can be parsed")


def _count(args) -> str:
    n, rest = args.n, args.values
    if args.kind in ("p1", "g1") and rest:
        raise ValueError(f"count {args.kind} takes no extra values")
    if min(rest, default=0) < 0:
        raise ValueError("exponents and frequencies must be nonnegative")
    if args.kind == "p1":
        value = classical.count_p1(n)
    elif args.kind == "g1":
        value = classical.count_g1(n)
    elif args.kind == "p2":
        if len(rest) > 4:
            raise ValueError("count p2 takes at most four marker exponents i j k l")
        value = colored.count_p2(n, tuple(rest) + (0,) * (4 - len(rest)))
    else:
        if len(rest) > 11:
            raise ValueError("count g2 takes at most eleven frequencies a b c d ab ac ad bc bd cd Q")
        f = FreqVector(*(tuple(rest) + (0,) * (11 - len(rest))))
        value = colored.count_g2(n, f)
    if args.format == "json":
        return json.dumps({"kind": args.kind, "n": n, "values": rest, "count": value})
    if args.format == "csv":
        return f"kind,n,count\n{args.kind},{n},{value}"
    return str(value)


def _enumerate(args) -> str:
    if args.kind == "g2":
        items = [str(p) for p in colored.iter_valid_g2(args.n) if p.total == args.n]
    else:
        items = ["(" + ", ".join(map(str, parts)) + ")" for parts in classical.iter_g1(args.n)]
    if args.format == "json":
        return json.dumps(items)
    if args.format == "csv":
        return "\n".join(["partition"] + [f'"{x}"' for x in items])
    return "\n".join(items)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgoellnitz",
        description="Count, enumerate and verify four-parameter Goellnitz-type "
                    "partition identities.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run one identity check")
    v.add_argument("name", choices=VERIFY_NAMES)
    v.add_argument("--nmax", type=int)
    v.add_argument("--ijkl-max", type=int, help="bound on the marker exponents")
    v.add_argument("--degree", type=int, help="q-truncation degree")
    v.add_argument("--lm-max", type=int, help="bound on L and M")
    v.add_argument("--count", type=int, default=15, help="symbols for `order`")

    c = sub.add_parser("count", parents=[common], help="count partitions of n")
    c.add_argument("kind", choices=("p1", "g1", "p2", "g2"))
    c.add_argument("n", type=int)
    c.add_argument("values", type=int, nargs="*",
                   help="p2: i j k l; g2: a b c d ab ac ad bc bd cd Q (missing = 0)")

    e = sub.add_parser("enumerate", parents=[common], help="list partitions of n")
    e.add_argument("kind", choices=("g2", "g1"))
    e.add_argument("n", type=int)

    t = sub.add_parser("table", parents=[common], help="P/G counts for n = 0..nmax")
    t.add_argument("which", choices=("thm1", "thmG"))
    t.add_argument("--nmax", type=int, default=100)
    return parser


def _check_bounds(args) -> None:
    for name in ("nmax", "ijkl_max", "degree", "lm_max", "n"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            raise ValueError(f"--{name.replace('_', '-')} must be nonnegative")
    if getattr(args, "count", 1) < 1:
        raise ValueError("--count must be >= 1")
    if args.jobs < 1:
        raise ValueError("--jobs must be >= 1")


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_bounds(args)
        status = 0
        if args.command == "verify":
            report = _verifiers()[args.name](args)
            text = format_report(report, args.format)
            status = 0 if report.passed else 1
        elif args.command == "count":
            text = _count(args)
        elif args.command == "enumerate":
            text = _enumerate(args)
        else:
            text = format_table(table_rows(args.which, args.nmax), args.format)
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "format_report", "format_table", "parse_table", "table_rows"]
