"""``ckcohomology`` command line: analyze, sweep, table, diagram.

Exit codes: 0 success with every oracle check agreeing, 1 a formula/oracle
disagreement, 2 a usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .algebra import MIN_N, OmegaSequence
from .report import analyze, contraction_table, diagram, sweep

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_N = 8
TABLE_NS = range(2, 7)


class UsageError(Exception):
    pass


def sweep_ceiling() -> int:
    raw = os.environ.get("CK_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CK_MAX_N must be an integer, got {raw!r}") from None


def _sequence(text: str) -> OmegaSequence:
    try:
        return OmegaSequence.parse(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse omega list {text!r}: {exc}") from None


def cmd_analyze(args) -> int:
    report = analyze(_sequence(args.omegas), brackets=args.brackets, unicode=args.unicode)
    print(report.to_json() if args.json else report.render(group_filter=args.group_filter))
    return EXIT_OK if report.agree else EXIT_DISAGREE


def cmd_sweep(args) -> int:
    ceiling = sweep_ceiling()
    if not MIN_N <= args.n <= ceiling:
        raise UsageError(f"sweep needs {MIN_N} <= N <= {ceiling} (set CK_MAX_N to raise the ceiling)")
    result = sweep(args.n, oracle=not args.no_oracle, parallel=args.parallel)
    print(result.to_json() if args.json else result.render())
    return EXIT_OK if result.all_agree else EXIT_DISAGREE


def cmd_table(args) -> int:
    if args.n not in TABLE_NS:
        raise UsageError(f"table supports N in {TABLE_NS.start}..{TABLE_NS.stop - 1}, got {args.n}")
    for cls in contraction_table(args.n, unicode=args.unicode):
        print(cls.render(unicode=args.unicode))
    return EXIT_OK


def cmd_diagram(args) -> int:
    seq = _sequence(args.omegas)
    try:
        print(diagram(seq, unicode=args.unicode))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ckcohomology",
        description="Second cohomology and central extensions of Cayley-Klein algebras so_{w1..wN}(N+1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    unicode = argparse.ArgumentParser(add_help=False)
    unicode.add_argument("--unicode", action="store_true", help="use Greek symbols and subscripts")

    p = sub.add_parser("analyze", parents=[unicode], help="report on one algebra")
    p.add_argument("omegas", help="comma-separated rationals, e.g. 0,1,-1/2")
    p.add_argument("--json", action="store_true")
    p.add_argument("--brackets", action="store_true", help="list the generic nontrivial extension")
    p.add_argument("--group-filter", action="store_true", help="show the compactness-filtered generators")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="all 3^N standardized algebras")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-oracle", action="store_true", help="skip the brute-force computation")
    p.add_argument("--parallel", action="store_true", help="evaluate in worker processes")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("table", parents=[unicode], help="classes of algebras by contraction pattern")
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("diagram", parents=[unicode], help="triangular generator array")
    p.add_argument("omegas")
    p.set_defaults(func=cmd_diagram)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ckcohomology: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
