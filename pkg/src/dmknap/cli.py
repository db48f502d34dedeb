"""Command-line front end: ``dmknap {solve,generate,bench,validate}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .core import InvalidInstance, MODES, validate
from .harness import ModeError, bench, generate, records_to_csv, solve
from .io import InstanceFormatError, read_instance, report_document
from .oracle import DEFAULT_CAP, OracleCapExceeded

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INVALID = 4
EXIT_EPSILON = 5
EXIT_CAP = 6
EXIT_INFEASIBLE = 7

EXIT_CODES = f"""exit codes:
  {EXIT_OK}  success
  {EXIT_USAGE}  bad command line
  {EXIT_PARSE}  instance file could not be parsed
  {EXIT_INVALID}  instance failed validation or mode does not apply
  {EXIT_EPSILON}  --epsilon missing or outside (0, 1)
  {EXIT_CAP}  oracle search space exceeds --cap
  {EXIT_INFEASIBLE}  instance is infeasible (report still printed)
"""


def _load(path):
    try:
        return read_instance(path)[0]
    except (OSError, InstanceFormatError) as exc:
        raise _Exit(EXIT_PARSE, f"cannot read {path}: {exc}")


class _Exit(Exception):
    def __init__(self, code, message):
        self.code, self.message = code, message


def cmd_solve(args) -> int:
    instance = _load(args.path)
    if args.mode == "fptas" and args.epsilon is None:
        raise _Exit(EXIT_EPSILON, "mode fptas needs --epsilon p/q")
    try:
        rep = solve(instance, args.mode, epsilon=args.epsilon, radius=args.radius,
                    cap=args.cap, binarized=args.binarized)
    except InvalidInstance as exc:
        raise _Exit(EXIT_INVALID, f"invalid instance: {exc}")
    except ModeError as exc:
        raise _Exit(EXIT_INVALID, str(exc))
    except (ValueError, ZeroDivisionError) as exc:
        if args.mode == "fptas":
            raise _Exit(EXIT_EPSILON, str(exc))
        raise
    except OracleCapExceeded as exc:
        raise _Exit(EXIT_CAP, str(exc))
    sys.stdout.write(report_document(rep))
    return EXIT_OK if rep.feasible else EXIT_INFEASIBLE


def cmd_generate(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, text in generate(args.seed, args.m, args.n, args.max_entry, args.max_u,
                               args.max_c, args.count, args.kind):
        (out / name).write_text(text)
        print(out / name)
    return EXIT_OK


def cmd_bench(args) -> int:
    modes = args.modes.split(",")
    for mode in modes:
        if mode not in MODES:
            raise _Exit(EXIT_USAGE, f"unknown mode {mode!r}")
    epsilons = args.epsilons.split(",") if args.epsilons else []
    if "fptas" in modes and not epsilons:
        raise _Exit(EXIT_EPSILON, "mode fptas needs --epsilons")
    records = bench(args.corpus, modes, epsilons, cap=args.cap, jobs=args.jobs)
    sys.stdout.write(records_to_csv(records))
    return EXIT_OK


def cmd_validate(args) -> int:
    instance = _load(args.path)
    violations = validate(instance)
    for v in violations:
        print(f"violation: {v}")
    if violations:
        return EXIT_INVALID
    print("ok")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmknap",
        description="Solvers for Delta-modular multidimensional knapsack and bounded standard-form ILPs.",
        epilog=EXIT_CODES,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance file", epilog=EXIT_CODES,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("path")
    p.add_argument("--mode", choices=MODES, default="exact-paths")
    p.add_argument("--epsilon", help="approximation error as p/q, required for fptas")
    p.add_argument("--radius", type=int, help="override the exact solvers' l1 search radius")
    p.add_argument("--binarized", action="store_true", help="binary-split moves in exact-levels")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="oracle search-space cap")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="write seeded random instance files")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--max-entry", type=int, default=4)
    p.add_argument("--max-u", type=int, default=3)
    p.add_argument("--max-c", type=int, default=5)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--kind", choices=("knapsack", "standard"), default="knapsack")
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="run solvers over a corpus, CSV on stdout")
    p.add_argument("corpus")
    p.add_argument("--modes", default="oracle,exact-paths")
    p.add_argument("--epsilons", default="", help="comma separated p/q values")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("validate", help="check an instance file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"dmknap: {exc.message}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
