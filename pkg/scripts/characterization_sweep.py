"""Cross-check the fairness characterization against the exhaustive oracle.

For each sampled triple multiset the script compares the constant-time
predicate (2-fair and not special) with an exhaustive search for a nice
2-coloring, and reports any disagreement.  With ``--exhaustive`` it also
walks every multiset of six triples over an alphabet of at most seven
symbols.

Usage:
    python3 scripts/characterization_sweep.py --count 100000
    python3 scripts/characterization_sweep.py --exhaustive --count 0
"""

import argparse
import itertools
import random
import time

from nicecolor import is_c_fair, is_special, normalize, oracle_nice_coloring
from nicecolor.generators import random_tuple_set


def check(ts, failures: list) -> bool:
    predicted = is_c_fair(ts, 2) and not is_special(ts)
    actual = oracle_nice_coloring(ts, 2) is not None
    if predicted != actual and len(failures) < 10:
        failures.append((ts.tuples, predicted, actual))
    return predicted == actual


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=100_000,
                        help="number of random instances to sample")
    parser.add_argument("--min-n", type=int, default=6,
                        help="smallest number of triples per random instance")
    parser.add_argument("--max-n", type=int, default=9,
                        help="largest number of triples per random instance")
    parser.add_argument("--max-alphabet", type=int, default=14)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--exhaustive", action="store_true",
        help="also enumerate all six-triple multisets over <=7 symbols")
    args = parser.parse_args(argv)

    failures: list = []
    agree = 0
    total = 0
    start = time.perf_counter()

    if args.exhaustive:
        triples = list(itertools.combinations(range(1, 8), 3))
        for rows in itertools.combinations_with_replacement(triples, 6):
            agree += check(normalize(rows).tuple_set, failures)
            total += 1
            if total % 500_000 == 0:
                print(f"  ... {total} exhaustive instances")

    rng = random.Random(args.seed)
    for _ in range(args.count):
        n = rng.randint(args.min_n, args.max_n)
        m = rng.randint(3, args.max_alphabet)
        agree += check(random_tuple_set(n, m, 3, rng), failures)
        total += 1

    elapsed = time.perf_counter() - start
    print(f"{total} instances in {elapsed:.1f}s: "
          f"{agree} agree, {total - agree} disagree")
    for tuples, predicted, actual in failures:
        print(f"  MISMATCH predicted={predicted} actual={actual}: {tuples}")
    return 1 if total != agree else 0


if __name__ == "__main__":
    raise SystemExit(main())
