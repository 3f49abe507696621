"""Deciding and constructing nice 2-colorings of triple multisets in O(n).

For n >= 6 triples a nice 2-coloring exists exactly when the instance is
2-fair and not special, and a witness can be found by brute-forcing a small
core sub-multiset whose nice partial 2-colorings stay nice on the whole
instance.  Smaller instances go straight to the exhaustive oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Coloring,
    TupleSet,
    WrongTupleSize,
    _special_base,
    is_c_fair,
    oracle_nice_coloring,
)

#: Largest number of tuples the extracted core can hold.
CORE_MAX = 15


class PreconditionViolated(ValueError):
    """Core extraction needs a 2-fair, non-special instance with n >= 6."""


@dataclass(frozen=True)
class CoreSubset:
    """Indices of the core tuples plus the induced, renormalized instance."""

    indices: tuple[int, ...]
    witness: TupleSet


def _require_triples(ts: TupleSet) -> None:
    if ts.k != 3:
        raise WrongTupleSize(f"expected triples, got k={ts.k}")


def decide_2colorable_triples(ts: TupleSet) -> bool:
    """Whether a nice total 2-coloring exists.  One pass over the tuples."""
    _require_triples(ts)
    if ts.n <= 5:
        return oracle_nice_coloring(ts, 2) is not None
    return is_c_fair(ts, 2) and _special_base(ts.tuples) is None


def _core_indices(ts: TupleSet) -> list[int]:
    """Pick the core: two anchors, two avoiders per anchor element, padding.

    Assumes ts is 2-fair, not special, and has n >= 6.  Every element on the
    two anchor tuples gets its first two avoiding tuples added (2-fairness
    guarantees they exist); every other element is avoided by both anchors.
    The set is padded to six members, and if the induced multiset happens to
    be special, one extra tuple differing from its repeated triple breaks the
    pattern (one must exist, the full instance being non-special).
    """
    core = {0, 1}
    for e in sorted(set(ts.tuples[0]) | set(ts.tuples[1])):
        found = 0
        for i, t in enumerate(ts.tuples):
            if e not in t:
                core.add(i)
                found += 1
                if found == 2:
                    break
    i = 0
    while len(core) < 6:
        if i not in core:
            core.add(i)
        i += 1
    picked = sorted(core)
    base = _special_base([ts.tuples[i] for i in picked])
    if base is not None:
        for i, t in enumerate(ts.tuples):
            if i not in core and t != base:
                core.add(i)
                break
        else:
            raise PreconditionViolated("instance is special")
        picked = sorted(core)
    return picked


def extract_core_subset(ts: TupleSet) -> CoreSubset:
    """A core of 6..15 tuples that is 2-fair, non-special, and lift-safe.

    Any nice (partial) 2-coloring of the core, read back through the index
    map, is a nice partial 2-coloring of the full instance: every element off
    the core's alphabet is avoided by each core tuple already.  Raises
    PreconditionViolated unless ts is 2-fair, non-special, with n >= 6.
    """
    _require_triples(ts)
    if ts.n < 6:
        raise PreconditionViolated("need at least 6 tuples")
    if not is_c_fair(ts, 2):
        raise PreconditionViolated("instance is not 2-fair")
    if _special_base(ts.tuples) is not None:
        raise PreconditionViolated("instance is special")
    picked = _core_indices(ts)
    return CoreSubset(tuple(picked), ts.induced(picked))


def color_2_triples(ts: TupleSet) -> Coloring | None:
    """A nice total 2-coloring, or None.  Linear time in n.

    n <= 5 is answered by the oracle.  Otherwise the core is extracted and
    brute-forced (it admits a nice 2-coloring whenever the instance is 2-fair
    and non-special), the core coloring is lifted to a nice partial coloring
    of the instance, and every remaining tuple gets color 0, which can only
    add avoidance witnesses.
    """
    _require_triples(ts)
    if ts.n <= 5:
        return oracle_nice_coloring(ts, 2)
    if not is_c_fair(ts, 2) or _special_base(ts.tuples) is not None:
        return None
    picked = _core_indices(ts)
    induced = ts.induced(picked)
    core_coloring = oracle_nice_coloring(induced, 2)
    if core_coloring is None:  # cannot happen for a 2-fair non-special core
        raise RuntimeError("core brute force failed on a decidable instance")
    assignment = {i: 0 for i in range(ts.n)}
    for j, color in core_coloring.assignment.items():
        assignment[picked[j]] = color
    return Coloring(2, assignment)
