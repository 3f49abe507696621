import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from nicecolor import (
    TupleSet,
    is_c_fair,
    is_nice,
    oracle_nice_coloring,
)
from nicecolor.general import (
    TooFewTuples,
    anchor_count,
    collapse_alphabet,
    dedup_capped,
    kernel_size_bound,
    solve_general,
    solve_partial_bounded,
)
from nicecolor.triple2 import color_2_triples
from support import make_tuple_set

DISJOINT = {
    n: make_tuple_set([tuple(range(3 * i + 1, 3 * i + 4)) for i in range(n)])
    for n in (6, 9)
}


def random_ktuple_set(n, m, k, rng):
    rows = [tuple(sorted(rng.sample(range(1, m + 1), k))) for _ in range(n)]
    return make_tuple_set(rows)


@st.composite
def ktuple_instances(draw, k, max_n=9, max_m=10):
    m = draw(st.integers(min_value=k, max_value=max_m))
    n = draw(st.integers(min_value=1, max_value=max_n))
    pool = list(itertools.combinations(range(1, m + 1), k))
    rows = draw(st.lists(st.sampled_from(pool), min_size=n, max_size=n))
    return make_tuple_set(rows)


class TestConstants:
    def test_anchor_counts(self):
        assert anchor_count(2, 3) == 5
        assert anchor_count(1, 3) == 1
        assert anchor_count(3, 3) == 9
        assert anchor_count(2, 4) == 6

    def test_kernel_size_bounds(self):
        assert kernel_size_bound(1, 3) == 8
        assert kernel_size_bound(2, 3) == 1152
        assert kernel_size_bound(3, 3) == 9912
        assert kernel_size_bound(2, 4) == 25902


class TestCollapse:
    def test_disjoint_tail_collapses_fully(self):
        ts = DISJOINT[6]  # m = 18
        reduced = collapse_alphabet(ts, range(5))
        assert reduced.kept_elements == tuple(range(1, 16))
        assert reduced.tuples[5] == ((), 3)
        for i in range(5):
            assert reduced.tuples[i] == (ts.tuples[i], 0)

    def test_single_anchor(self):
        ts = make_tuple_set([(1, 2, 3), (3, 4, 5), (6, 7, 8)])
        reduced = collapse_alphabet(ts, [0])
        assert reduced.kept_elements == (1, 2, 3)
        assert reduced.tuples == (((1, 2, 3), 0), ((3,), 2), ((), 3))

    def test_no_dummy_when_anchors_cover_alphabet(self):
        ts = make_tuple_set([(1, 2, 3), (1, 2, 4), (3, 4, 5), (1, 3, 5), (2, 4, 5)])
        reduced = collapse_alphabet(ts, range(5))
        assert all(stars == 0 for _, stars in reduced.tuples)

    def test_too_few_tuples(self):
        with pytest.raises(TooFewTuples):
            collapse_alphabet(make_tuple_set([(1, 2, 3)]), range(5))


class TestDedup:
    def test_cap_applies_per_shape(self):
        ts = make_tuple_set([(1, 2, 3)] * 2 + [(4, 5, 6)] * 5)
        reduced = collapse_alphabet(ts, range(2))
        capped = dedup_capped(reduced, 2)
        shapes = list(capped.tuples)
        assert shapes.count(((1, 2, 3), 0)) == 2
        assert shapes.count(((), 3)) == 2
        assert capped.back_map == (0, 1, 2, 3)

    def test_all_distinct_kept(self):
        ts = make_tuple_set([(1, 2, 3), (1, 2, 4), (3, 4, 5), (1, 4, 5), (2, 3, 4)])
        reduced = collapse_alphabet(ts, range(5))
        capped = dedup_capped(reduced, 2)
        assert capped.tuples == reduced.tuples

    def test_triple_cap(self):
        ts = make_tuple_set([(1, 2, 3)] * 9 + [(2, 3, 4)] * 9)
        reduced = collapse_alphabet(ts, range(9))
        capped = dedup_capped(reduced, 3)
        assert len(capped.tuples) == 6
        assert capped.back_map == (0, 1, 2, 9, 10, 11)

    def test_kernel_within_bound(self):
        rng = random.Random(4)
        for c, k in ((1, 3), (2, 3), (3, 3), (2, 4)):
            s = anchor_count(c, k)
            ts = random_ktuple_set(60, 10, k, rng)
            capped = dedup_capped(collapse_alphabet(ts, range(s)), c)
            assert len(capped.tuples) <= kernel_size_bound(c, k)


class TestSolveGeneral:
    def test_one_color_matches_fairness(self):
        rng = random.Random(11)
        for _ in range(300):
            ts = random_ktuple_set(rng.randint(1, 12), rng.randint(3, 9), 3, rng)
            col = solve_general(ts, 1)
            assert (col is not None) == is_c_fair(ts, 1)
            if col is not None:
                assert is_nice(ts, col)

    def test_three_colors_nine_disjoint(self):
        col = solve_general(DISJOINT[9], 3)
        assert col is not None
        assert is_nice(DISJOINT[9], col)
        assert oracle_nice_coloring(DISJOINT[9], 3) is not None

    @given(ktuple_instances(k=3))
    @settings(deadline=None, max_examples=120)
    def test_triples_two_colors_agree_with_linear_path(self, ts):
        got = solve_general(ts, 2)
        want = color_2_triples(ts)
        assert (got is None) == (want is None)
        if got is not None:
            assert is_nice(ts, got)

    @given(ktuple_instances(k=4, max_n=8, max_m=10), st.integers(min_value=1, max_value=2))
    @settings(deadline=None, max_examples=80)
    def test_quadruples_match_oracle(self, ts, c):
        col = solve_general(ts, c)
        assert (col is not None) == (oracle_nice_coloring(ts, c) is not None)
        if col is not None:
            assert col.is_total(ts.n)
            assert is_nice(ts, col)

    @given(ktuple_instances(k=3, max_n=8, max_m=9), st.integers(min_value=1, max_value=3))
    @settings(deadline=None, max_examples=80)
    def test_triples_match_oracle(self, ts, c):
        col = solve_general(ts, c)
        assert (col is not None) == (oracle_nice_coloring(ts, c) is not None)
        if col is not None:
            assert is_nice(ts, col)

    def test_large_instance_runs_without_oracle(self):
        rng = random.Random(21)
        ts = random_ktuple_set(5000, 30, 3, rng)
        col = solve_general(ts, 3)
        if col is not None:
            assert is_nice(ts, col)
        assert solve_general(ts, 3) == col

    def test_overlapping_kernel_prefix_stays_fast(self):
        # The first anchor tuples all share element 3, so the earliest kernel
        # rows cannot close a color class on their own.  The capped search
        # must notice that a full class with leftover bits is dead instead of
        # walking the whole remaining subtree (this instance used to take
        # minutes).
        tuples = ((1, 2, 3), (1, 3, 4), (3, 5, 6), (3, 4, 7), (3, 6, 8),
                  (4, 5, 9), (5, 6, 10), (8, 11, 12), (3, 7, 8), (4, 7, 9),
                  (4, 9, 12), (6, 12, 13), (3, 12, 14), (2, 8, 11),
                  (6, 11, 13), (2, 5, 14), (3, 9, 11), (6, 11, 14),
                  (4, 12, 14), (6, 11, 12), (4, 9, 12), (10, 12, 13),
                  (9, 10, 11), (5, 7, 13), (2, 3, 6), (7, 11, 13), (3, 4, 10))
        ts = TupleSet(3, 14, tuples)
        col = solve_general(ts, 3)
        assert col is not None
        assert is_nice(ts, col)


class TestSolvePartialBounded:
    def test_bound_and_niceness(self):
        rng = random.Random(31)
        seen_present = 0
        for _ in range(200):
            k = rng.choice((3, 4))
            c = rng.choice((1, 2, 3))
            ts = random_ktuple_set(rng.randint(1, 20), rng.randint(k, 10), k, rng)
            part = solve_partial_bounded(ts, c)
            total = solve_general(ts, c)
            assert (part is None) == (total is None)
            if part is not None:
                seen_present += 1
                assert is_nice(ts, part)
                for members in part.color_classes():
                    assert len(members) <= ts.k + 1
        assert seen_present > 50
