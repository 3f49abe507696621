"""Multisets of k-tuples and nice colorings.

A k-tuple is a set of k distinct positive integers; an instance is a finite
multiset of such tuples over a normalized alphabet [m] in which every id from
1 to m occurs in at least one tuple.  Tuples are addressed by their index in
the instance, so duplicate tuples are distinct coloring targets and are never
merged implicitly.

A tuple *avoids* an element when the element is not one of its members.  A
(partial) coloring with colors 0..c-1 is *nice* when every color class
contains, for every element of the alphabet, a tuple avoiding that element.
An instance is *c-fair* when every element is avoided by at least c tuples;
this is necessary for a nice c-coloring because the classes are disjoint and
each needs its own avoiding tuple.

A triple instance is *special* when it consists of n-3 copies of one triple
{a, b, c} plus three further triples that each contain exactly one of a, b, c
(a different one each) and otherwise only elements outside {a, b, c}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from . import search

DEFAULT_ORACLE_BUDGET = 10_000_000


class NonUniformTupleSize(ValueError):
    """Raw tuples do not all have the same length."""


class RepeatedElementInTuple(ValueError):
    """A raw tuple mentions the same token twice."""


class EmptyInput(ValueError):
    """An instance with zero tuples was given but not permitted."""


class WrongTupleSize(ValueError):
    """An operation that needs a fixed k was handed a different one."""


class NotNice(ValueError):
    """The supplied coloring is not nice on the instance."""


class PinnedColorClash(ValueError):
    """Pinned tuple indices do not carry distinct colors."""


class BudgetExceeded(RuntimeError):
    """The exhaustive search space is larger than the caller's budget."""


KTuple = tuple[int, ...]


@dataclass(frozen=True)
class TupleSet:
    """A multiset of k-tuples over the alphabet 1..m, addressed by index.

    ``tuples[i]`` is strictly increasing; every id in 1..m occurs somewhere.
    The empty instance is represented with k = 0 and m = 0.
    """

    k: int
    m: int
    tuples: tuple[KTuple, ...]

    def __post_init__(self) -> None:
        if not self.tuples:
            if self.k != 0 or self.m != 0:
                raise ValueError("empty instance must have k = 0 and m = 0")
            return
        if self.k < 1:
            raise ValueError("k must be at least 1")
        seen = [False] * (self.m + 1)
        for t in self.tuples:
            if len(t) != self.k:
                raise NonUniformTupleSize(f"tuple {t} does not have {self.k} elements")
            prev = 0
            for e in t:
                if e <= prev:
                    raise RepeatedElementInTuple(f"tuple {t} is not strictly increasing")
                if e > self.m:
                    raise ValueError(f"element {e} outside alphabet 1..{self.m}")
                seen[e] = True
                prev = e
        for e in range(1, self.m + 1):
            if not seen[e]:
                raise ValueError(f"element {e} occurs in no tuple")

    @property
    def n(self) -> int:
        return len(self.tuples)

    def induced(self, indices: Sequence[int]) -> "TupleSet":
        """The sub-multiset at ``indices``, renormalized to its own alphabet."""
        rows = [self.tuples[i] for i in indices]
        return normalize(rows, allow_empty=True).tuple_set


@dataclass(frozen=True)
class Normalization:
    """A normalized instance together with the token bijection that built it."""

    tuple_set: TupleSet
    token_to_id: dict[Hashable, int]
    id_to_token: tuple[Hashable, ...]


@dataclass(frozen=True)
class Coloring:
    """A (partial) assignment of colors 0..c-1 to tuple indices."""

    c: int
    assignment: dict[int, int]

    def __post_init__(self) -> None:
        if self.c < 1:
            raise ValueError("need at least one color")
        if self.assignment:
            values = self.assignment.values()
            if min(values) < 0 or max(values) >= self.c:
                raise ValueError("assigned color outside 0..c-1")
            if min(self.assignment) < 0:
                raise ValueError("negative tuple index")

    def is_total(self, n: int) -> bool:
        return len(self.assignment) == n

    def color_classes(self) -> list[list[int]]:
        """Member indices per color, each list ascending."""
        classes: list[list[int]] = [[] for _ in range(self.c)]
        for idx in sorted(self.assignment):
            classes[self.assignment[idx]].append(idx)
        return classes


def normalize(raw: Iterable[Sequence[Hashable]], *, allow_empty: bool = False) -> Normalization:
    """Map raw token tuples onto the alphabet 1..m.

    Tokens get ids in first-occurrence order, scanning tuples left to right
    and each tuple's tokens in their written order.  Raises
    NonUniformTupleSize, RepeatedElementInTuple, or EmptyInput.
    """
    rows = [tuple(r) for r in raw]
    if not rows:
        if not allow_empty:
            raise EmptyInput("instance has no tuples")
        return Normalization(TupleSet(0, 0, ()), {}, ())
    k = len(rows[0])
    if k < 1:
        raise NonUniformTupleSize("tuples must have at least one element")
    token_to_id: dict[Hashable, int] = {}
    tuples = []
    for row in rows:
        if len(row) != k:
            raise NonUniformTupleSize(
                f"tuple {row!r} has {len(row)} elements, expected {k}")
        if len(set(row)) != len(row):
            raise RepeatedElementInTuple(f"tuple {row!r} repeats an element")
        ids = []
        for tok in row:
            if tok not in token_to_id:
                token_to_id[tok] = len(token_to_id) + 1
            ids.append(token_to_id[tok])
        tuples.append(tuple(sorted(ids)))
    id_to_token = tuple(sorted(token_to_id, key=token_to_id.get))
    ts = TupleSet(k, len(token_to_id), tuple(tuples))
    return Normalization(ts, token_to_id, id_to_token)


def is_nice(ts: TupleSet, col: Coloring) -> bool:
    """Whether every color class avoids every element of 1..m.

    A class avoids element e when some member tuple does not contain e, so a
    class fails exactly when it is empty (and m >= 1) or some element occurs
    in all of its members.
    """
    sizes = [0] * col.c
    member_counts: list[dict[int, int]] = [{} for _ in range(col.c)]
    for idx, color in col.assignment.items():
        sizes[color] += 1
        counts = member_counts[color]
        for e in ts.tuples[idx]:
            counts[e] = counts.get(e, 0) + 1
    if ts.m == 0:
        return True
    for size, counts in zip(sizes, member_counts):
        if size == 0:
            return False
        for cnt in counts.values():
            if cnt == size:
                return False
    return True


def is_c_fair(ts: TupleSet, c: int) -> bool:
    """True iff every element is absent from at least c tuples."""
    if c < 0:
        raise ValueError("c must be nonnegative")
    occ = [0] * (ts.m + 1)
    for t in ts.tuples:
        for e in t:
            occ[e] += 1
    limit = ts.n - c
    return all(v <= limit for v in occ[1:])


def is_c_fair_anchored(ts: TupleSet, c: int) -> bool:
    """c-fairness checked via c anchor tuples instead of a full census.

    Any element outside all of the first c tuples is already avoided c times
    by the anchors themselves, so only elements appearing on some anchor need
    their occurrences counted.
    """
    if c < 0:
        raise ValueError("c must be nonnegative")
    if ts.n < c:
        return ts.m == 0
    anchor_elems = {e for t in ts.tuples[:c] for e in t}
    occ = dict.fromkeys(anchor_elems, 0)
    for t in ts.tuples:
        for e in t:
            if e in occ:
                occ[e] += 1
    limit = ts.n - c
    return all(v <= limit for v in occ.values())


def _special_base(tuples: Sequence[KTuple]) -> KTuple | None:
    """The repeated triple of a special multiset, or None.

    Works on raw sorted triples so callers can test sub-multisets that keep
    their parent's element ids.
    """
    n = len(tuples)
    if n < 4:
        return None
    counts = Counter(tuples)
    target = n - 3
    for t, cnt in counts.items():
        if cnt != target:
            continue
        residual: list[KTuple] = []
        for u, cu in counts.items():
            if u != t:
                residual.extend([u] * cu)
        base = set(t)
        covered = set()
        ok = True
        for r in residual:
            inter = base.intersection(r)
            if len(inter) != 1:
                ok = False
                break
            x = inter.pop()
            if x in covered:
                ok = False
                break
            covered.add(x)
        if ok:
            return t
    return None


def is_special(ts: TupleSet) -> bool:
    """Whether a triple instance matches the special pattern (k = 3 only)."""
    if ts.tuples and ts.k != 3:
        raise WrongTupleSize(f"special pattern is defined for triples, got k={ts.k}")
    return _special_base(ts.tuples) is not None


def partialize(ts: TupleSet, col: Coloring, pinned: Iterable[int] | None = None) -> Coloring:
    """Shrink a nice coloring to at most k+1 kept tuples per color.

    Per color: keep one anchor tuple (the pinned one, else the lowest index)
    plus, for each of the anchor's k elements, the lowest-index tuple of that
    color avoiding it.  Every element off the anchor is avoided by the anchor
    itself, so the restriction stays nice.  Raises NotNice when the input
    coloring is not nice, PinnedColorClash when pinned indices do not carry
    distinct colors.
    """
    if not is_nice(ts, col):
        raise NotNice("input coloring is not nice")
    anchors: dict[int, int] = {}
    if pinned is not None:
        for idx in pinned:
            color = col.assignment.get(idx)
            if color is None:
                raise PinnedColorClash(f"pinned index {idx} is uncolored")
            if color in anchors:
                raise PinnedColorClash(
                    f"pinned indices {anchors[color]} and {idx} share color {color}")
            anchors[color] = idx
    classes = col.color_classes()
    kept: dict[int, int] = {}
    for color, members in enumerate(classes):
        if not members:
            continue  # only possible in the degenerate m = 0 case
        anchor = anchors.get(color, members[0])
        keep = {anchor}
        for e in ts.tuples[anchor]:
            for i in members:
                if e not in ts.tuples[i]:
                    keep.add(i)
                    break
        for i in keep:
            kept[i] = color
    return Coloring(col.c, kept)


def _tuple_mask(t: KTuple) -> int:
    mask = 0
    for e in t:
        mask |= 1 << (e - 1)
    return mask


def oracle_nice_coloring(
    ts: TupleSet,
    c: int,
    partial_only: bool = False,
    budget: int = DEFAULT_ORACLE_BUDGET,
) -> Coloring | None:
    """Exhaustive search over all c^n total (or (c+1)^n partial) colorings.

    Returns the first nice coloring in lexicographic order of assignment
    vectors, with uncolored sorting before color 0, or None when no nice
    coloring exists.  Raises BudgetExceeded when the assignment space is
    larger than ``budget``.  Meant as the ground-truth reference for small
    instances; the solver modules never call it on large ones.
    """
    if c < 1:
        raise ValueError("need at least one color")
    base = c + 1 if partial_only else c
    if base ** ts.n > budget:
        raise BudgetExceeded(
            f"{base}^{ts.n} assignments exceed the budget of {budget}")
    masks = [_tuple_mask(t) for t in ts.tuples]
    universe = (1 << ts.m) - 1
    if not partial_only and c == 2 and ts.n <= 20:
        vec: list[int | None] | None = search.first_nice_total_two_coloring(masks, universe)
    else:
        vec = search.search_first_nice(masks, c, universe, allow_uncolored=partial_only)
    if vec is None:
        return None
    return Coloring(c, {i: v for i, v in enumerate(vec) if v is not None})


def parse_instance(text: str, *, allow_empty: bool = False) -> Normalization:
    """Parse the one-tuple-per-line text format.

    Tokens are whitespace separated; blank lines and lines starting with '#'
    are ignored.
    """
    rows = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append(stripped.split())
    return normalize(rows, allow_empty=allow_empty)


def render_instance(ts: TupleSet, id_to_token: Sequence[Hashable] | None = None) -> str:
    """Render an instance in the text format, one tuple per line.

    Each tuple is written with its original tokens in normalized-id order;
    without a token table the ids themselves are written.
    """
    lines = []
    for t in ts.tuples:
        if id_to_token is None:
            lines.append(" ".join(str(e) for e in t))
        else:
            lines.append(" ".join(str(id_to_token[e - 1]) for e in t))
    return "\n".join(lines) + ("\n" if lines else "")
