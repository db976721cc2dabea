"""Closed-form solution of the parity-coefficient problem next to the expansion and recursion.

    python scripts/m_family_tour.py --N 4 --rho 1.3 --n-max 12
"""
import argparse

import numpy as np

from opdiffeq.checks import random_m_config, relative_deviation
from opdiffeq.m_family import check_properties, closed_form_general, parity_families
from opdiffeq.solver import CauchyProblem, recurse_oracle, solve_general


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--N", type=int, default=4)
    parser.add_argument("--rho", type=float, default=1.0)
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    cfg = random_m_config(rng, args.N, args.rho)
    report = check_properties(cfg)
    print("identities:", "all pass" if report.ok else report.failures())

    fam0, fam1 = parity_families(cfg)
    y0 = rng.standard_normal(args.N) + 1j * rng.standard_normal(args.N)
    y1 = rng.standard_normal(args.N) + 1j * rng.standard_normal(args.N)
    p = CauchyProblem(fam0, fam1, y0, y1)
    print(f"{'n':>3} {'|Y_n|':>10} {'dev expansion':>14} {'dev recursion':>14}")
    for n in range(args.n_max + 1):
        closed = closed_form_general(cfg, n, y0, y1)
        print(
            f"{n:>3} {np.linalg.norm(closed):>10.4f}"
            f" {relative_deviation(closed, solve_general(p, n)):>14.2e}"
            f" {relative_deviation(closed, recurse_oracle(p, n)):>14.2e}"
        )


if __name__ == "__main__":
    main()
