"""Lexicographic-first search for nice color assignments over bitmask rows.

Rows are bitmasks over a small alphabet (one bit per symbol).  An assignment
gives every row a color in ``range(c)`` or leaves it uncolored, and it is
*nice* when every color class contains, for each alphabet bit, a row with
that bit clear.  Equivalently: the AND of each class's row masks is zero,
where an empty class carries the full universe mask (so it fails unless the
universe itself is empty).

Assignment vectors are ordered lexicographically with
uncolored < color 0 < color 1 < ... and position 0 most significant.  Every
entry point returns the first nice vector in that order, so the result does
not depend on which internal pruning path ran.
"""

from __future__ import annotations

from typing import Sequence

FOUND = "found"
ABSENT = "absent"
LIMIT = "limit"

# Past this many rows the 2**n subset tables stop being practical and the
# depth-first search runs without the partition-table fallback.
PARTITION_TABLE_MAX_ROWS = 14
DEFAULT_NODE_LIMIT = 30_000


def subset_and_table(masks: Sequence[int], universe: int) -> list[int]:
    """AND of the row masks over every subset of rows.

    Subsets are encoded with bit ``(n - 1 - i)`` standing for row ``i``.  With
    that encoding the subset holding a total 2-coloring's color-1 rows equals
    the assignment vector read as a base-2 number, so scanning subset integers
    in increasing order scans total 2-colorings in lexicographic order.
    The empty subset maps to ``universe``.
    """
    n = len(masks)
    table = [universe] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        table[s] = table[s ^ low] & masks[n - low.bit_length()]
    return table


def first_nice_total_two_coloring(masks: Sequence[int], universe: int) -> list[int] | None:
    """First (lexicographic) total 2-coloring that is nice, or None.

    Direct table scan; meant for modest row counts where the 2**n table fits
    comfortably.
    """
    n = len(masks)
    table = subset_and_table(masks, universe)
    full = (1 << n) - 1
    for s in range(full + 1):
        if table[s] == 0 and table[full ^ s] == 0:
            return [(s >> (n - 1 - i)) & 1 for i in range(n)]
    return None


def nice_partition_exists(masks: Sequence[int], c: int, universe: int, *, require_total: bool) -> bool:
    """Whether c pairwise-disjoint nonempty nice row classes exist.

    With ``require_total`` the classes must additionally cover every row.
    Runs in O(3**n) by enumerating submasks, independent of how tangled the
    instance is, which makes it the refutation fallback when plain search
    stalls.
    """
    n = len(masks)
    full = (1 << n) - 1
    table = subset_and_table(masks, universe)
    reachable = bytearray(full + 1)
    reachable[0] = 1
    for _ in range(c):
        nxt = bytearray(full + 1)
        for s in range(full + 1):
            if not reachable[s]:
                continue
            rest = full ^ s
            t = rest
            while t:
                if table[t] == 0:
                    nxt[s | t] = 1
                t = (t - 1) & rest
        reachable = nxt
    if require_total:
        return bool(reachable[full])
    return any(reachable)


def first_nice_vector(
    masks: Sequence[int],
    c: int,
    universe: int,
    *,
    allow_uncolored: bool,
    per_color_cap: int | None = None,
    node_limit: int | None = None,
    uncolored_last: bool = False,
) -> tuple[str, list[int | None] | None]:
    """Depth-first scan for the first nice vector in lexicographic order.

    Returns ``(FOUND, vector)``, ``(ABSENT, None)``, or ``(LIMIT, None)`` when
    ``node_limit`` assignments were tried without a verdict.  By default the
    symbol order is uncolored < 0 < ... < c-1; with ``uncolored_last`` it is
    0 < ... < c-1 < uncolored, which favors vectors that color early rows.
    (Leaving many early rows uncolored pushes the whole solution into the
    final rows, which can be ruinously slow when those rows overlap heavily,
    so existence-oriented callers prefer the colored-first order.)  All
    pruning is exact:

    * a class whose running AND cannot be cleared even by taking every
      remaining row is dead (``and & suffix != 0``);
    * fewer remaining rows than empty classes is dead;
    * a bit avoided by fewer than c rows overall makes the whole instance
      absent (the c classes are disjoint and each needs an avoiding row);
    * ``per_color_cap`` may only be combined with ``allow_uncolored``:
      uncoloring rows keeps every avoidance witness of the remaining rows,
      so whenever any nice vector exists one within the cap exists too, and
      under the default order uncoloring also lowers the vector, so the
      lexicographically first nice vector itself respects the cap.  Capped
      branches therefore never hide the first solution.
    """
    if per_color_cap is not None and not allow_uncolored:
        raise ValueError("per_color_cap requires allow_uncolored")
    n = len(masks)

    suffix = [universe] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] & masks[i]
    if suffix[0]:
        return (ABSENT, None)  # some bit occurs in every row
    bit = 1
    while bit <= universe:
        if universe & bit:
            avoid = sum(1 for mk in masks if not (mk & bit))
            if avoid < c:
                return (ABSENT, None)
        bit <<= 1

    sym_count = (1 if allow_uncolored else 0) + c
    ands = [universe] * c
    counts = [0] * c
    choice: list[int | None] = [None] * n
    next_sym = [0] * (n + 1)
    changed: list[tuple[int, int]] = [(-1, 0)] * n
    pos = 0
    nodes = 0

    if n == 0:
        # Only the empty assignment exists; universe != 0 here, so the empty
        # classes can never be nice.
        return (ABSENT, None)

    while pos >= 0:
        s = next_sym[pos]
        if s == sym_count:
            pos -= 1
            if pos >= 0:
                j, prev = changed[pos]
                if j >= 0:
                    ands[j] = prev
                    counts[j] -= 1
            continue
        next_sym[pos] = s + 1

        if allow_uncolored and s == (c if uncolored_last else 0):
            changed[pos] = (-1, 0)
            choice[pos] = None
        else:
            j = s - 1 if allow_uncolored and not uncolored_last else s
            if per_color_cap is not None and counts[j] == per_color_cap:
                continue
            prev = ands[j]
            ands[j] = prev & masks[pos]
            counts[j] += 1
            changed[pos] = (j, prev)
            choice[pos] = j

        nodes += 1
        if node_limit is not None and nodes > node_limit:
            return (LIMIT, None)

        npos = pos + 1
        suf = suffix[npos]
        dead = False
        for j2 in range(c):
            a = ands[j2]
            if a & suf:
                dead = True
                break
            # A class that used up its cap without clearing every bit can
            # never be completed, whatever happens to the remaining rows.
            if a and per_color_cap is not None and counts[j2] == per_color_cap:
                dead = True
                break
        if not dead:
            empties = 0
            for cj in counts:
                if cj == 0:
                    empties += 1
            if n - npos < empties:
                dead = True
        if dead:
            j, prev = changed[pos]
            if j >= 0:
                ands[j] = prev
                counts[j] -= 1
            continue
        if npos == n:
            # suffix[n] == universe, so surviving the prune means every
            # class AND is zero: this is the first nice vector.
            return (FOUND, list(choice))
        pos = npos
        next_sym[pos] = 0
    return (ABSENT, None)


def search_first_nice(
    masks: Sequence[int],
    c: int,
    universe: int,
    *,
    allow_uncolored: bool,
    per_color_cap: int | None = None,
    uncolored_last: bool = False,
) -> list[int | None] | None:
    """First nice vector in lexicographic order, or None.

    Orchestrates the depth-first scan with a node budget and, for small row
    counts, the subset-partition fallback so that refutations stay cheap.
    """
    n = len(masks)
    if universe == 0:
        # Nothing to avoid: the very first vector is nice.
        return [None] * n if allow_uncolored and not uncolored_last else [0] * n
    limit = DEFAULT_NODE_LIMIT if n <= PARTITION_TABLE_MAX_ROWS else None
    status, vec = first_nice_vector(
        masks, c, universe,
        allow_uncolored=allow_uncolored, per_color_cap=per_color_cap, node_limit=limit,
        uncolored_last=uncolored_last,
    )
    if status == LIMIT:
        if not nice_partition_exists(masks, c, universe, require_total=not allow_uncolored):
            return None
        status, vec = first_nice_vector(
            masks, c, universe,
            allow_uncolored=allow_uncolored, per_color_cap=per_color_cap, node_limit=None,
            uncolored_last=uncolored_last,
        )
    return vec if status == FOUND else None
