"""Term growth of the closed form against O(n) recursion.

    python scripts/bench_growth.py --n-max 22 --dim 4

Prints the bench CSV plus the growth ratio of successive term counts, which
approaches the golden ratio since the case-I term total is the Fibonacci number F_n.
"""
import argparse
import io
from contextlib import redirect_stdout

from opdiffeq.cli import main


def run(n_max: int, dim: int) -> None:
    buf = io.StringIO()
    with redirect_stdout(buf):
        main(["bench", "--n-max", str(n_max), "--dim", str(dim)])
    rows = [line.split(",") for line in buf.getvalue().splitlines()[1:]]
    print(f"{'n':>3} {'terms':>7} {'ratio':>6} {'closed_us':>10} {'recurse_us':>10} {'slowdown':>9}")
    prev = None
    for n, terms, closed_ns, recurse_ns in rows:
        terms, closed, recurse = int(terms), int(closed_ns) / 1e3, int(recurse_ns) / 1e3
        ratio = f"{terms / prev:.3f}" if prev else "-"
        print(f"{n:>3} {terms:>7} {ratio:>6} {closed:>10.1f} {recurse:>10.1f} {closed / recurse:>9.1f}")
        prev = terms or None


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-max", type=int, default=20)
    parser.add_argument("--dim", type=int, default=4)
    args = parser.parse_args()
    run(args.n_max, args.dim)
