"""Benchmark the linear-time two-coloring pass across instance sizes.

Generates fair, non-special triple multisets of increasing size, times
``color_2_triples`` on each, and prints a table with the step-to-step ratio
so linear scaling is visible at a glance.

Usage:
    python3 scripts/bench_linear.py --sizes 10000 100000 1000000 --alphabet 50
"""

import argparse
import random
import time

from nicecolor import color_2_triples, is_nice
from nicecolor.generators import random_fair_nonspecial


def best_of(runs: int, func) -> float:
    best = float("inf")
    for _ in range(runs):
        start = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes", type=int, nargs="+",
        default=[10_000, 100_000, 1_000_000],
        help="numbers of triples to benchmark")
    parser.add_argument(
        "--alphabet", type=int, default=50,
        help="alphabet size the triples are drawn from")
    parser.add_argument("--runs", type=int, default=3,
                        help="timed runs per size (best is reported)")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    print(f"{'triples':>10} {'seconds':>10} {'ratio':>8} {'us/triple':>10}")
    previous: tuple[int, float] | None = None
    for n in args.sizes:
        ts = random_fair_nonspecial(n, args.alphabet, rng)
        seconds = best_of(args.runs, lambda: color_2_triples(ts))
        coloring = color_2_triples(ts)
        assert coloring is not None and is_nice(ts, coloring)
        if previous is None:
            ratio = "-"
        else:
            ratio = f"{seconds / previous[1] / (n / previous[0]):.2f}x"
        print(f"{n:>10} {seconds:>10.4f} {ratio:>8} {seconds / n * 1e6:>10.2f}")
        previous = (n, seconds)
    print("\nratio column: observed slowdown divided by the size increase;"
          " values near 1.00x indicate linear scaling.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
