"""Command-line front end for running verification campaigns.

Exit codes: 0 when every check passes, 1 when any verification fails,
2 for usage errors (argparse follows the same convention).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .campaign import ALL_IDS, VerifyConfig, emit_report, run_verify

USAGE_EXIT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bernkit",
        description="Verify Bernstein basis-function identities, generating-function "
        "equations, and certified series numerically and symbolically.",
    )
    parser.add_argument(
        "--max-degree", type=int, default=10, help="largest basis degree to sweep (default 10)"
    )
    parser.add_argument(
        "--egf-order",
        type=int,
        default=24,
        help="truncation order for generating-function checks (default 24)",
    )
    parser.add_argument(
        "--identities",
        default=None,
        metavar="A,B,C",
        help="comma-separated subset of check ids (default: all; see --list-identities)",
    )
    parser.add_argument(
        "--series-eps",
        default="1e-9",
        metavar="EPS",
        help="target tail bound for series checks, parsed exactly (default 1e-9)",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized basis checks")
    parser.add_argument("--list-identities", action="store_true", help="print check ids and exit")
    parser.add_argument("--mutate", metavar="ID", default=None, help=argparse.SUPPRESS)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.list_identities:
        print("\n".join(ALL_IDS))
        return 0
    try:
        eps = Fraction(args.series_eps)
    except (ValueError, ZeroDivisionError):
        print(f"error: cannot parse --series-eps value {args.series_eps!r}", file=sys.stderr)
        return USAGE_EXIT
    identities = None
    if args.identities is not None:
        identities = tuple(s for s in (t.strip() for t in args.identities.split(",")) if s)
    config = VerifyConfig(
        max_degree=args.max_degree,
        egf_order=args.egf_order,
        identities=identities,
        series_eps=eps,
        format=args.format,
        seed=args.seed,
    )
    try:
        config.validate()
        if args.mutate is not None and args.mutate not in ALL_IDS:
            raise ValueError(f"unknown identity id for --mutate: {args.mutate!r}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    report = run_verify(config, mutate=args.mutate)
    sys.stdout.write(emit_report(report))
    return report.exit_status


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
