"""Ground truth by execution: an instrumented MergeSort and its recursion tree.

The sorter here is deliberately plain -- recursive top-down MergeSort that
splits off the first floor(n/2) keys -- but every key-vs-key comparison
inside the merge is counted.  Index and bounds checks are never counted;
comparisons are the only cost.  Together with the deterministic best-case,
worst-case, and seeded-random input generators this gives an executable
check of every count formula.

``build_tree`` materializes the tree of recursive call sizes without
sorting anything, for structural checks (depth, level widths, per-level
comparison totals).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dyadic import ceil_lg

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SortTrace:
    """Sorted output plus the exact number of key comparisons spent on it."""

    output: list
    comparisons: int
    n: int


def merge_count(a: Sequence, b: Sequence) -> tuple[list, int]:
    """Two-pointer merge of sorted sequences, counting key comparisons.

    Ties take from ``a`` (stable).  For nonempty inputs the count lies in
    [min(|a|,|b|), |a|+|b|-1]; empty inputs cost nothing.
    """
    merged: list = []
    append = merged.append
    i = j = 0
    len_a, len_b = len(a), len(b)
    comps = 0
    while i < len_a and j < len_b:
        comps += 1
        x, y = a[i], b[j]
        if x <= y:
            append(x)
            i += 1
        else:
            append(y)
            j += 1
    merged.extend(a[i:] if i < len_a else b[j:])
    return merged, comps


def _sort(items: list) -> tuple[list, int]:
    n = len(items)
    if n <= 1:
        return items, 0
    half = n >> 1
    left, comps_left = _sort(items[:half])
    right, comps_right = _sort(items[half:])
    merged, comps_merge = merge_count(left, right)
    return merged, comps_left + comps_right + comps_merge


def merge_sort_count(items: Sequence) -> SortTrace:
    """Sort a sequence of comparable keys, reporting the exact comparison count.

    Splits are always first floor(n/2) / last ceil(n/2) elements, so the
    count is reproducible for any input, and lands between the best and
    worst counts for its length.
    """
    output, comps = _sort(list(items))
    return SortTrace(output=output, comparisons=comps, n=len(output))


def best_case_input(n: int) -> list[int]:
    """0..n-1 ascending; sorting it costs exactly the minimum count."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return list(range(n))


def worst_case_input(n: int) -> list[int]:
    """A permutation of 0..n-1 on which sorting costs exactly the maximum count.

    Built by parity-splitting the sorted values: the odd-indexed values go
    to the first floor(n/2) slots and the even-indexed to the rest, each
    half arranged the same way recursively.  Every merge then interleaves
    perfectly and pays its full price.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _parity_arrange(list(range(n)))


def _parity_arrange(values: list[int]) -> list[int]:
    if len(values) <= 2:
        return values
    return _parity_arrange(values[1::2]) + _parity_arrange(values[0::2])


def _splitmix64(state: int) -> tuple[int, int]:
    """One step of the SplitMix64 generator; returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def random_input(n: int, seed: int) -> list[int]:
    """Seed-deterministic permutation of 0..n-1.

    SplitMix64 drives a Fisher-Yates shuffle; no platform randomness is
    involved, so the same seed gives the same permutation everywhere.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = list(range(n))
    state = seed & _MASK64
    for i in range(n - 1, 0, -1):
        state, word = _splitmix64(state)
        j = word % (i + 1)
        out[i], out[j] = out[j], out[i]
    return out


@dataclass(frozen=True)
class TreeNode:
    """One recursive call: its subarray size and its 0 or 2 children."""

    size: int
    children: tuple["TreeNode", ...]


@dataclass(frozen=True)
class RecursionTree:
    """Size-labeled tree of recursive MergeSort calls, stored level by level.

    Level 0 is the root (size n); a node of size s >= 2 has children of
    sizes floor(s/2) and ceil(s/2); nodes of size 1 are leaves.
    """

    n: int
    levels: tuple[tuple[int, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def width(self, level: int) -> int:
        return len(self.levels[level])

    def sizes(self, level: int) -> tuple[int, ...]:
        return self.levels[level]

    def level_comps(self, level: int) -> int:
        """Worst-case comparisons across the level: sum of (size - 1)."""
        row = self.levels[level]
        return sum(row) - len(row)

    def leaf_count(self) -> int:
        return sum(1 for row in self.levels for s in row if s == 1)

    def root(self) -> TreeNode:
        """Materialize the node view (children ordered left then right)."""

        def grow(size: int) -> TreeNode:
            if size == 1:
                return TreeNode(size, ())
            return TreeNode(size, (grow(size >> 1), grow((size + 1) >> 1)))

        return grow(self.n)


def build_tree(n: int) -> RecursionTree:
    """Recursion tree for input size n; its depth is always ceil(lg n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    levels = [(n,)]
    while any(s >= 2 for s in levels[-1]):
        levels.append(
            tuple(c for s in levels[-1] if s >= 2 for c in (s >> 1, (s + 1) >> 1))
        )
    tree = RecursionTree(n=n, levels=tuple(levels))
    assert tree.depth == ceil_lg(n)
    return tree
