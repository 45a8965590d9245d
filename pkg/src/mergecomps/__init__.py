"""Exact comparison-count analysis of top-down MergeSort.

Everything is computed in exact integer or dyadic-rational arithmetic:
best- and worst-case comparison counts (each by independent routes), the
total-bits function they encode, the Takagi function at binary rationals,
and an instrumented sorter that confirms the formulas by execution.
"""

from .counts import (
    AnalysisRow,
    analyze,
    best_comps,
    best_comps_ceil,
    best_comps_zigzag,
    best_worst_gap,
    digit_sum,
    floor_sum_halves,
    floor_sum_window,
    gap_lower_witnesses,
    level_comps,
    worst_comps,
    worst_comps_sum,
)
from .dyadic import Dyadic, ceil_lg, floor_lg, zigzag, zigzag_fraction
from .fractal import (
    ApproxValue,
    best_from_takagi,
    takagi_approx,
    takagi_at_mantissa,
    takagi_dyadic,
    takagi_from_best,
    takagi_partial,
    takagi_rescaled,
    zigzag_sum,
)
from .oracle import (
    RecursionTree,
    SortTrace,
    TreeNode,
    best_case_input,
    build_tree,
    merge_count,
    merge_sort_count,
    random_input,
    worst_case_input,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisRow",
    "ApproxValue",
    "Dyadic",
    "RecursionTree",
    "SortTrace",
    "TreeNode",
    "analyze",
    "best_case_input",
    "best_comps",
    "best_comps_ceil",
    "best_comps_zigzag",
    "best_from_takagi",
    "best_worst_gap",
    "build_tree",
    "ceil_lg",
    "digit_sum",
    "floor_lg",
    "floor_sum_halves",
    "floor_sum_window",
    "gap_lower_witnesses",
    "level_comps",
    "merge_count",
    "merge_sort_count",
    "random_input",
    "takagi_approx",
    "takagi_at_mantissa",
    "takagi_dyadic",
    "takagi_from_best",
    "takagi_partial",
    "takagi_rescaled",
    "worst_case_input",
    "worst_comps",
    "worst_comps_sum",
    "zigzag",
    "zigzag_fraction",
    "zigzag_sum",
]
