"""Slow, independent reference implementations the tests check the package against.

Everything here works by direct definition chasing (plain loops over tuples
and colorings), deliberately sharing no code with the package's bitmask or
kernel machinery.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator, Sequence

from nicecolor import Coloring, TupleSet, normalize


def reference_is_nice(ts: TupleSet, col: Coloring) -> bool:
    """Definition-chasing niceness check: three nested loops, no bitmasks."""
    if ts.m == 0:
        return True
    for color in range(col.c):
        members = [ts.tuples[i] for i, v in col.assignment.items() if v == color]
        for e in range(1, ts.m + 1):
            if not any(e not in t for t in members):
                return False
    return True


def reference_oracle(ts: TupleSet, c: int, partial_only: bool = False) -> Coloring | None:
    """First nice coloring by brute force over every assignment vector.

    Iterates itertools.product in the same lexicographic order the package
    promises (uncolored before color 0 before color 1 ...), so it pins not
    just presence but the exact witness.
    """
    symbols: list[int | None] = [None] + list(range(c)) if partial_only else list(range(c))
    for vec in itertools.product(symbols, repeat=ts.n):
        col = Coloring(c, {i: v for i, v in enumerate(vec) if v is not None})
        if reference_is_nice(ts, col):
            return col
    return None


def is_reducible(ts: TupleSet, c: int = 2) -> bool:
    """Whether some tuple can be deleted with the rest staying c-fair."""
    from nicecolor import is_c_fair

    for drop in range(ts.n):
        rest = ts.induced([i for i in range(ts.n) if i != drop])
        if is_c_fair(rest, c):
            return True
    return False


def random_triple_rows(n: int, m: int, rng: random.Random) -> list[tuple[int, ...]]:
    return [tuple(sorted(rng.sample(range(1, m + 1), 3))) for _ in range(n)]


def make_tuple_set(rows: Iterable[Sequence[int]]) -> TupleSet:
    """Build a TupleSet from raw rows, renormalizing the alphabet."""
    return normalize([list(r) for r in rows]).tuple_set


# ---------------------------------------------------------------------------
# Scheduler references: partition enumeration and backtracking edge coloring.
# ---------------------------------------------------------------------------


def partitions_3_4(items: Sequence[int]) -> Iterator[list[tuple[int, ...]]]:
    """All partitions of ``items`` into blocks of size 3 or 4.

    The lowest remaining item is always placed in the next block, so each
    partition is produced exactly once.
    """
    items = sorted(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for size in (3, 4):
        for others in itertools.combinations(rest, size - 1):
            block = (first, *others)
            remaining = [x for x in rest if x not in others]
            for tail in partitions_3_4(remaining):
                yield [block, *tail]


def backtrack_3_edge_colorable(edges: Sequence[tuple[int, str]]) -> bool:
    """Whether the bipartite (team, problem) edge list has a proper 3-edge-coloring.

    Plain backtracking over edges; no alternating-path reasoning.
    """
    team_used: dict[int, set[int]] = {}
    prob_used: dict[str, set[int]] = {}

    def go(at: int) -> bool:
        if at == len(edges):
            return True
        t, p = edges[at]
        for color in range(3):
            if color in team_used.setdefault(t, set()):
                continue
            if color in prob_used.setdefault(p, set()):
                continue
            team_used[t].add(color)
            prob_used[p].add(color)
            if go(at + 1):
                return True
            team_used[t].remove(color)
            prob_used[p].remove(color)
        return False

    return go(0)


def brute_feasible(portfolios: Sequence) -> bool:
    """Schedule feasibility by trying every 3/4 partition and edge-coloring
    each block by backtracking.  Memoizes per block of portfolio contents."""
    cache: dict[tuple, bool] = {}

    def block_ok(block: tuple[int, ...]) -> bool:
        key = tuple(sorted(tuple(sorted(portfolios[i].problems)) for i in block))
        if key not in cache:
            edges = [(i, p) for i in block for p in portfolios[i].problems]
            cache[key] = backtrack_3_edge_colorable(edges)
        return cache[key]

    for partition in partitions_3_4(range(len(portfolios))):
        if all(block_ok(block) for block in partition):
            return True
    return False


def proper_group_coloring(edges: Sequence[tuple[int, str]],
                          rounds: dict[tuple[int, str], int]) -> bool:
    """Whether ``rounds`` is a proper 3-edge-coloring of ``edges`` into {1,2,3}."""
    if set(rounds) != set(edges):
        return False
    team_seen: dict[int, set[int]] = {}
    prob_seen: dict[str, set[int]] = {}
    for (t, p), r in rounds.items():
        if r not in (1, 2, 3):
            return False
        if r in team_seen.setdefault(t, set()) or r in prob_seen.setdefault(p, set()):
            return False
        team_seen[t].add(r)
        prob_seen[p].add(r)
    return True
