"""Nice c-colorings of k-tuple multisets in O(n) for fixed c and k.

The instance is shrunk to a kernel whose size depends only on c and k: the
first s = (k+1)(c-1) + 1 tuples are anchors, every element outside the
anchors' alphabet is collapsed to a dummy placeholder (a tuple may hold
several), and duplicate collapsed tuples are capped at c copies.  A nice
partial c-coloring of the kernel, treating the dummy like any other element
to avoid, maps back to a nice partial c-coloring of the instance; coloring
every remaining tuple 0 then yields a nice total coloring.  Instances with
fewer than s tuples are answered by the exhaustive oracle directly, which is
constant work for fixed c and k.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from . import search
from .core import Coloring, TupleSet, oracle_nice_coloring, partialize


class TooFewTuples(ValueError):
    """The instance has fewer tuples than requested anchors."""


#: A collapsed tuple: the kept element ids in increasing order, plus how many
#: of the original k members were replaced by the dummy placeholder.
CollapsedTuple = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class ReducedInstance:
    """Collapsed (and possibly deduplicated) tuples with their origins.

    ``back_map[i]`` is the index in the source instance that kernel position
    ``i`` represents; ``anchor_set`` lists the anchor indices and
    ``kept_elements`` the anchor alphabet, ascending.
    """

    tuples: tuple[CollapsedTuple, ...]
    back_map: tuple[int, ...]
    anchor_set: tuple[int, ...]
    kept_elements: tuple[int, ...]


def anchor_count(c: int, k: int) -> int:
    """Number of anchor tuples needed for c colors and k-tuples."""
    return (k + 1) * (c - 1) + 1


def kernel_size_bound(c: int, k: int) -> int:
    """Largest kernel the collapse/dedup pipeline can produce.

    At most k * anchor_count(c, k) distinct elements survive the collapse, a
    collapsed tuple is some j dummies plus k-j survivors, and dedup keeps at
    most c copies of each shape.
    """
    ks = k * anchor_count(c, k)
    return c * sum(comb(ks, k - j) for j in range(k + 1))


def collapse_alphabet(ts: TupleSet, anchors: Sequence[int]) -> ReducedInstance:
    """Replace every element outside the anchor alphabet with the dummy.

    The result keeps one collapsed tuple per source tuple, in source order.
    Raises TooFewTuples when the instance cannot supply the anchors.
    """
    if ts.n < len(anchors):
        raise TooFewTuples(f"need {len(anchors)} tuples, have {ts.n}")
    kept = sorted({e for a in anchors for e in ts.tuples[a]})
    kept_set = set(kept)
    collapsed = []
    for t in ts.tuples:
        real = tuple(e for e in t if e in kept_set)
        collapsed.append((real, len(t) - len(real)))
    return ReducedInstance(
        tuple(collapsed), tuple(range(ts.n)), tuple(anchors), tuple(kept))


def dedup_capped(reduced: ReducedInstance, c: int) -> ReducedInstance:
    """Keep at most c copies of each collapsed shape, earliest indices first.

    A color class never needs two tuples of the same shape, so c copies are
    enough for any nice partial c-coloring, and keeping the earliest makes
    the kernel deterministic.
    """
    seen: dict[CollapsedTuple, int] = {}
    tuples = []
    back = []
    for pos, shape in enumerate(reduced.tuples):
        have = seen.get(shape, 0)
        if have < c:
            seen[shape] = have + 1
            tuples.append(shape)
            back.append(reduced.back_map[pos])
    return ReducedInstance(
        tuple(tuples), tuple(back), reduced.anchor_set, reduced.kept_elements)


def _kernel_masks(reduced: ReducedInstance) -> tuple[list[int], int]:
    """Bitmasks over the collapsed alphabet; bit 0 is the dummy."""
    pos = {e: i + 1 for i, e in enumerate(reduced.kept_elements)}
    masks = []
    for kept, dummies in reduced.tuples:
        mask = 1 if dummies else 0
        for e in kept:
            mask |= 1 << pos[e]
        masks.append(mask)
    universe = (2 << len(reduced.kept_elements)) - 1
    return masks, universe


def solve_general(ts: TupleSet, c: int) -> Coloring | None:
    """A nice total c-coloring, or None.  Linear time for fixed c and k.

    The kernel search looks for a nice partial assignment with at most k+1
    tuples per color; that cap loses nothing because shrinking a class keeps
    every avoidance witness of the remaining tuples and a minimal nice
    restriction never needs more.  Colors are tried before "uncolored" so the
    solution lands on the earliest kernel rows instead of being pushed into
    the suffix.  The kernel coloring is lifted through back_map and every
    uncolored tuple gets color 0.
    """
    if c < 1:
        raise ValueError("need at least one color")
    if ts.n == 0:
        return oracle_nice_coloring(ts, c)
    s = anchor_count(c, ts.k)
    if ts.n < s:
        return oracle_nice_coloring(ts, c, budget=max((c + 1) ** s, 1 << 20))
    reduced = dedup_capped(collapse_alphabet(ts, range(s)), c)
    masks, universe = _kernel_masks(reduced)
    vec = search.search_first_nice(
        masks, c, universe, allow_uncolored=True, per_color_cap=ts.k + 1,
        uncolored_last=True)
    if vec is None:
        return None
    assignment = {i: 0 for i in range(ts.n)}
    for pos, color in enumerate(vec):
        if color is not None:
            assignment[reduced.back_map[pos]] = color
    return Coloring(c, assignment)


def solve_partial_bounded(ts: TupleSet, c: int) -> Coloring | None:
    """A nice partial c-coloring using each color at most k+1 times, or None."""
    total = solve_general(ts, c)
    if total is None:
        return None
    return partialize(ts, total)
