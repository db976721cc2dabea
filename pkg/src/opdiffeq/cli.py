"""Command-line interface.

Exit codes: 0 ok, 1 bad input file, 2 usage error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

import numpy as np

from . import checks
from .compositions import count_by_length, count_total
from .errors import NegativeIndex, OpDiffError, SchemaError
from .ordered_products import BracedSpec, Constraint, expand_braced, render_product
from .problem import encode_vector, load_problem
from .solver import CauchyProblem, recurse_oracle, solve_case_I, solve_general, term_census

EXIT_OK, EXIT_INPUT, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


def cmd_expand(args) -> int:
    constraint = Constraint.NONE
    if args.ends_with_l0:
        constraint = Constraint.ENDS_WITH_L0
    elif args.first_l0_positive:
        constraint = Constraint.FIRST_L0_BLOCK_POSITIVE
    elif args.first_l0_zero:
        constraint = Constraint.FIRST_L0_BLOCK_ZERO
    try:
        products = expand_braced(BracedSpec(args.u, args.v, args.q, constraint))
    except NegativeIndex as exc:
        print(f"error: {exc} (use --ends-with-l0 with --q 2)", file=sys.stderr)
        return EXIT_USAGE
    if not products:
        print("0")
    for p in products:
        print(render_product(p))
    return EXIT_OK


def cmd_count(args) -> int:
    parts = [f"r={r}:{count_by_length(args.u, args.v, r)}" for r in range(1, min(args.u, args.v) + 2)]
    parts.append(f"total:{count_total(args.u, args.v)}")
    print(" ".join(parts))
    return EXIT_OK


def cmd_solve(args) -> int:
    problem = load_problem(args.spec)
    p = problem.cauchy()
    if args.method == "recurse":
        print(json.dumps(encode_vector(problem.wrap(recurse_oracle(p, args.n)))))
        return EXIT_OK
    closed = solve_general(p, args.n)
    if args.method == "closed":
        print(json.dumps(encode_vector(problem.wrap(closed))))
        return EXIT_OK
    recursed = recurse_oracle(p, args.n)
    deviation = checks.relative_deviation(closed, recursed)
    print(json.dumps({
        "closed": encode_vector(problem.wrap(closed)),
        "recurse": encode_vector(problem.wrap(recursed)),
        "deviation": deviation,
    }))
    if deviation > checks.REL_TOL:
        print(f"verification failed: relative deviation {deviation:.3e}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    problem = load_problem(args.spec) if args.spec else None
    results = checks.run_all(n_max=args.n_max, trials=args.trials, seed=args.seed, problem=problem)
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def _best_ns(fn, repeat: int) -> int:
    best = None
    for _ in range(repeat):
        start = time.perf_counter_ns()
        fn()
        elapsed = time.perf_counter_ns() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def cmd_bench(args) -> int:
    rng = np.random.default_rng(args.seed)
    base = checks.random_table_problem(rng, args.dim, max(args.n_max, 1))
    p = CauchyProblem(base.fam0, base.fam1, np.zeros(args.dim, complex), base.Y1)
    print("n,terms,closed_ns,recurse_ns")
    for n in range(args.n_max + 1):
        terms = sum(row[3] for row in term_census(n))
        closed_ns = _best_ns(lambda: solve_case_I(p, n), args.repeat)
        recurse_ns = _best_ns(lambda: recurse_oracle(p, n), args.repeat)
        print(f"{n},{terms},{closed_ns},{recurse_ns}")
    return EXIT_OK


def _bounded_int(lower: int):
    def parse(text: str) -> int:
        value = int(text)
        if value < lower:
            raise argparse.ArgumentTypeError(f"must be >= {lower}, got {value}")
        return value

    parse.__name__ = "int"
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opdiffeq",
        description="Closed-form solution of Y(n+2) = L0(n) Y(n) + L1(n) Y(n+1) with operator coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print the ordered products of a braced sum")
    p.add_argument("--u", type=int, required=True, help="number of L0 letters")
    p.add_argument("--v", type=int, required=True, help="number of L1 letters")
    p.add_argument("--q", type=int, choices=(1, 2), default=1)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--ends-with-l0", action="store_true", help="keep words whose last letter is L0")
    group.add_argument("--first-l0-positive", action="store_true", help="keep words starting with L0")
    group.add_argument("--first-l0-zero", action="store_true", help="keep words starting with L1")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("count", help="count words per length and in total")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("solve", help="evaluate Y_n for a JSON problem file")
    p.add_argument("spec", help="path to the problem JSON")
    p.add_argument("--n", type=_bounded_int(0), required=True)
    p.add_argument("--method", choices=("closed", "recurse", "both"), default="closed")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run the self-verification suites")
    p.add_argument("spec", nargs="?", help="optional problem JSON to check as well")
    p.add_argument("--n-max", type=_bounded_int(0), default=12)
    p.add_argument("--trials", type=_bounded_int(1), default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the closed form against recursion (CSV)")
    p.add_argument("--n-max", type=_bounded_int(0), default=16)
    p.add_argument("--dim", type=_bounded_int(1), default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=_bounded_int(1), default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OpDiffError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
