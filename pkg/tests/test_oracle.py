"""The instrumented sorter, input generators, and recursion tree."""

import pytest
from hypothesis import given, settings, strategies as st

from mergecomps import counts, oracle
from mergecomps.dyadic import ceil_lg

sorted_lists = st.lists(st.integers(-1000, 1000), max_size=60).map(sorted)


class TestMergeCount:
    @pytest.mark.parametrize(
        "a, b, merged, comps",
        [([0, 1], [2, 3], [0, 1, 2, 3], 2),    # shorter-list best case
         ([1, 3], [0, 2], [0, 1, 2, 3], 3),    # alternating, full price
         ([], [5], [5], 0)],
    )
    def test_examples(self, a, b, merged, comps):
        assert oracle.merge_count(a, b) == (merged, comps)

    @given(sorted_lists, sorted_lists)
    def test_merges_correctly_within_bounds(self, a, b):
        merged, comps = oracle.merge_count(a, b)
        assert merged == sorted(a + b)
        if a and b:
            assert min(len(a), len(b)) <= comps <= len(a) + len(b) - 1
        else:
            assert comps == 0

    def test_stability_on_ties(self):
        class Keyed:
            def __init__(self, key, tag):
                self.key, self.tag = key, tag

            def __le__(self, other):
                return self.key <= other.key

        a = [Keyed(1, "a1"), Keyed(2, "a2")]
        b = [Keyed(1, "b1"), Keyed(2, "b2")]
        merged, _ = oracle.merge_count(a, b)
        # ties resolved from the left sequence
        assert [x.tag for x in merged] == ["a1", "b1", "a2", "b2"]


class TestMergeSortCount:
    @pytest.mark.parametrize(
        "items, comps",
        [([0, 1, 2, 3], 4), ([1, 3, 0, 2], 5), ([7], 0), ([], 0)],
    )
    def test_examples(self, items, comps):
        trace = oracle.merge_sort_count(items)
        assert trace.comparisons == comps
        assert trace.output == sorted(items)
        assert trace.n == len(items)

    @given(st.lists(st.integers(-50, 50), max_size=200))
    @settings(max_examples=200)
    def test_sorts_any_input_within_bounds(self, items):
        trace = oracle.merge_sort_count(items)
        assert trace.output == sorted(items)
        if items:
            n = len(items)
            assert counts.best_comps(n) <= trace.comparisons <= counts.worst_comps(n)

    @given(st.lists(st.text(max_size=4), max_size=40))
    def test_any_ordered_key_type(self, items):
        assert oracle.merge_sort_count(items).output == sorted(items)


class TestGenerators:
    def test_best_case_examples(self):
        assert oracle.best_case_input(4) == [0, 1, 2, 3]
        assert oracle.best_case_input(1) == [0]
        assert oracle.merge_sort_count(oracle.best_case_input(5)).comparisons == 5

    def test_worst_case_examples(self):
        assert oracle.worst_case_input(2) in ([0, 1], [1, 0])
        assert oracle.worst_case_input(4) == [1, 3, 0, 2]
        trace = oracle.merge_sort_count(oracle.worst_case_input(8))
        assert sorted(oracle.worst_case_input(8)) == list(range(8))
        assert trace.comparisons == 17

    def test_counts_hit_the_extremes(self):
        for n in range(1, 600):
            best = oracle.merge_sort_count(oracle.best_case_input(n))
            worst = oracle.merge_sort_count(oracle.worst_case_input(n))
            assert best.comparisons == counts.best_comps(n)
            assert worst.comparisons == counts.worst_comps(n)
            assert best.output == worst.output == list(range(n))

    def test_random_examples(self):
        assert oracle.random_input(1, 999) == [0]
        assert oracle.random_input(5, 7) == oracle.random_input(5, 7)
        trace = oracle.merge_sort_count(oracle.random_input(100, 3))
        assert counts.best_comps(100) <= trace.comparisons <= counts.worst_comps(100)

    @given(st.integers(1, 500), st.integers(0, (1 << 64) - 1))
    @settings(max_examples=150)
    def test_random_is_a_seeded_permutation(self, n, seed):
        out = oracle.random_input(n, seed)
        assert sorted(out) == list(range(n))
        assert out == oracle.random_input(n, seed)

    @pytest.mark.parametrize("fn", [oracle.best_case_input, oracle.worst_case_input])
    def test_reject_zero(self, fn):
        with pytest.raises(ValueError):
            fn(0)
        with pytest.raises(ValueError):
            oracle.random_input(0, 1)


class TestRecursionTree:
    def test_examples(self):
        five = oracle.build_tree(5)
        assert five.depth == 3
        assert [five.width(i) for i in range(4)] == [1, 2, 4, 2]
        one = oracle.build_tree(1)
        assert one.depth == 0 and one.levels == ((1,),)
        eight = oracle.build_tree(8)
        assert eight.depth == 3
        assert all(eight.width(i) == 1 << i for i in range(4))

    def test_node_view_matches_levels(self):
        tree = oracle.build_tree(11)
        frontier = [tree.root()]
        for level in tree.levels:
            assert tuple(node.size for node in frontier) == level
            frontier = [c for node in frontier for c in node.children]
        assert not frontier

    def test_node_children_rule(self):
        def check(node):
            if node.size == 1:
                assert node.children == ()
            else:
                left, right = node.children
                assert (left.size, right.size) == (node.size // 2, (node.size + 1) // 2)
                check(left)
                check(right)

        check(oracle.build_tree(37).root())

    @given(st.integers(1, 3000))
    @settings(max_examples=200)
    def test_structure_invariants(self, n):
        tree = oracle.build_tree(n)
        h = tree.depth
        assert h == ceil_lg(n)
        assert tree.leaf_count() == n
        for i in range(h + 1):
            row = tree.sizes(i)
            assert max(row) - min(row) <= 1
            if i < h:
                assert len(row) == 1 << i
                assert sum(row) == n
                assert tree.level_comps(i) == n - (1 << i)
        assert all(s == 1 for s in tree.sizes(h))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            oracle.build_tree(0)
