"""Random and structured instance generators used by the CLI and the tests."""

from __future__ import annotations

import random

from .core import TupleSet, is_c_fair, is_special, normalize


def random_tuple_set(n: int, m: int, k: int, rng: random.Random) -> TupleSet:
    """n random k-subsets of an alphabet of m symbols, repeats allowed.

    Every symbol is forced to occur somewhere by renormalizing down to the
    symbols actually drawn, so the result's element count may be below m.
    """
    if k > m:
        raise ValueError(f"cannot draw {k} distinct elements from {m}")
    rows = [sorted(rng.sample(range(m), k)) for _ in range(n)]
    return normalize(rows).tuple_set


def special_instance(n: int, m: int, rng: random.Random) -> TupleSet:
    """A special triple system: n - 3 copies of one triple plus three
    residual triples that each meet it in a single, distinct element.

    Requires n >= 4 and m >= 5 (two symbols must live outside the repeated
    triple).  The symbols and the order of the tuples are shuffled.
    """
    if n < 4:
        raise ValueError("a special set needs at least 4 tuples")
    if m < 5:
        raise ValueError("a special set needs at least 5 elements")
    symbols = list(range(m))
    rng.shuffle(symbols)
    base = symbols[:3]
    outside = symbols[3:]
    rows = [list(base) for _ in range(n - 3)]
    for x in base:
        rest = rng.sample(outside, 2)
        rows.append([x, *rest])
    rng.shuffle(rows)
    ts = normalize(rows).tuple_set
    if not is_special(ts):
        raise AssertionError("generator produced a non-special set")
    return ts


def random_fair_nonspecial(n: int, m: int, rng: random.Random,
                           max_tries: int = 10_000) -> TupleSet:
    """A random triple system that is 2-fair and not special, by rejection."""
    for _ in range(max_tries):
        ts = random_tuple_set(n, m, 3, rng)
        if is_c_fair(ts, 2) and not is_special(ts):
            return ts
    raise RuntimeError(f"no 2-fair non-special instance found in {max_tries} draws")


def random_instance(n: int, m: int, k: int = 3, seed: int | None = None,
                    special: bool = False) -> TupleSet:
    """Entry point behind ``nicecolor gen``."""
    rng = random.Random(seed)
    if special:
        if k != 3:
            raise ValueError("special sets are defined for triples only")
        return special_instance(n, m, rng)
    return random_tuple_set(n, m, k, rng)
