"""Named invariant sweeps behind the ``verify`` CLI command.

Each check scans a bounded grid, stops at the first counterexample, and
reports it as a short string; ``None`` means the sweep passed.  Checks are
grouped into suites and always run in a fixed order so output is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import counts, fractal, oracle
from .dyadic import Dyadic, ceil_lg, floor_lg, zigzag

Check = Callable[[int, int], Optional[str]]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _best_agreement(max_n: int, _max_m: int) -> Optional[str]:
    running_bits = 0  # digit_sum(n), accumulated
    for n in range(1, max_n + 1):
        b = counts.best_comps(n)
        for label, value in (
            ("zigzag form", counts.best_comps_zigzag(n)),
            ("ceil form", counts.best_comps_ceil(n)),
            ("digit sum", running_bits),
        ):
            if value != b:
                return f"n={n} recurrence={b} {label}={value}"
        running_bits += n.bit_count()
    return None


def _worst_agreement(max_n: int, _max_m: int) -> Optional[str]:
    running = 0  # sum of ceil(lg i) for i <= n
    for n in range(1, max_n + 1):
        running += ceil_lg(n)
        closed = counts.worst_comps(n)
        if closed != running:
            return f"n={n} closed={closed} sum={running}"
    return None


def _level_decomposition(max_n: int, _max_m: int) -> Optional[str]:
    for n in range(1, max_n + 1):
        total = 0
        for k in range(floor_lg(n) + 1):
            closed = counts.level_comps(n, k)
            direct = sum((n + i) >> (k + 1) for i in range(1 << k))
            if closed != direct:
                return f"n={n} k={k} closed={closed} direct={direct}"
            total += closed
        b = counts.best_comps(n)
        if total != b:
            return f"n={n} level total={total} best={b}"
    return None


def _gap_band(max_n: int, _max_m: int) -> Optional[str]:
    prev_best = prev_worst = 0
    witnesses = set(counts.gap_lower_witnesses(2 * max_n.bit_length()))
    for n in range(1, max_n + 1):
        b, w = counts.best_comps(n), counts.worst_comps(n)
        gap = 2 * b - w
        if not (n - 1 <= 2 * gap <= 2 * (n - 1)):
            return f"n={n} gap={gap} outside [(n-1)/2, n-1]"
        residual = fractal.zigzag_sum(Dyadic(n))
        if Dyadic(n - 1) - residual != gap:
            return f"n={n} gap={gap} residual={residual}"
        if n & (n - 1) == 0 and gap != n - 1:
            return f"n={n} power of two but gap={gap} != {n - 1}"
        if n in witnesses and 2 * gap != n - 1:
            return f"n={n} witness but 2*gap={2 * gap} != {n - 1}"
        if b < prev_best or w < prev_worst:
            return f"n={n} count decreased: best {prev_best}->{b} worst {prev_worst}->{w}"
        prev_best, prev_worst = b, w
    return None


def _halves_identity(max_n: int, max_m: int) -> Optional[str]:
    for n in range(max_n + 1):
        for m in range(1, max_m + 1):
            lhs, rhs = counts.floor_sum_halves(n, m)
            if rhs != lhs:
                return f"n={n} m={m} lhs={lhs} rhs={rhs}"
    return None


def _window_identity(max_n: int, max_m: int) -> Optional[str]:
    for n in range(max_n + 1):
        for m in range(1, max_m + 1):
            got = counts.floor_sum_window(n, m)
            if got != n:
                return f"n={n} m={m} lhs={got} rhs={n}"
    return None


def _oracle_best(max_n: int, _max_m: int) -> Optional[str]:
    for n in range(1, max_n + 1):
        trace = oracle.merge_sort_count(oracle.best_case_input(n))
        expected = counts.best_comps(n)
        if trace.comparisons != expected:
            return f"n={n} comps={trace.comparisons} best={expected}"
        if trace.output != list(range(n)):
            return f"n={n} output not sorted"
    return None


def _oracle_worst(max_n: int, _max_m: int) -> Optional[str]:
    for n in range(1, max_n + 1):
        trace = oracle.merge_sort_count(oracle.worst_case_input(n))
        expected = counts.worst_comps(n)
        if trace.comparisons != expected:
            return f"n={n} comps={trace.comparisons} worst={expected}"
        if trace.output != list(range(n)):
            return f"n={n} output not sorted"
    return None


def _oracle_random(max_n: int, _max_m: int) -> Optional[str]:
    for n in (10, 100, 1000):
        if n > max_n:
            continue
        for seed in range(10):
            trace = oracle.merge_sort_count(oracle.random_input(n, seed))
            lo, hi = counts.best_comps(n), counts.worst_comps(n)
            if not lo <= trace.comparisons <= hi:
                return f"n={n} seed={seed} comps={trace.comparisons} outside [{lo}, {hi}]"
            if trace.output != list(range(n)):
                return f"n={n} seed={seed} output not sorted"
    return None


def _takagi_bridge(max_n: int, _max_m: int) -> Optional[str]:
    for n in range(1, max_n + 1):
        b = counts.best_comps(n)
        for k in range(ceil_lg(n), ceil_lg(n) + 9):
            from_best = fractal.takagi_from_best(n, k)
            direct = fractal.takagi_dyadic(Dyadic(n, k))
            if from_best != direct:
                return f"n={n} k={k} lhs={from_best} rhs={direct}"
            if 3 * direct > 2 or direct < 0:
                return f"n={n} k={k} takagi={direct} outside [0, 2/3]"
            back = fractal.best_from_takagi(n, k)
            if back != b:
                return f"n={n} k={k} lhs={back} rhs={b}"
    return None


def _takagi_mantissa(max_n: int, _max_m: int) -> Optional[str]:
    for n in range(1, max_n + 1):
        lg = floor_lg(n)
        shortcut = fractal.takagi_at_mantissa(n)
        direct = fractal.takagi_dyadic(Dyadic(n, lg))
        if shortcut != direct:
            return f"n={n} lhs={shortcut} rhs={direct}"
        if shortcut.mul_pow2(lg) != fractal.zigzag_sum(Dyadic(n)):
            return f"n={n} scaled mantissa value != zigzag_sum"
        if fractal.takagi_rescaled(Dyadic(n)) != fractal.zigzag_sum(Dyadic(n)):
            return f"n={n} rescaled takagi != zigzag_sum"
        if n & (n - 1):  # identity genuinely fails below the valid k range
            bogus = Dyadic(n * lg - 2 * counts.best_comps(n), lg)
            if not direct > bogus:
                return f"n={n} k={lg} expected strict gap, lhs={direct} rhs={bogus}"
    return None


def _zigzag_scaling(max_n: int, _max_m: int) -> Optional[str]:
    """Scaled zigzag values: saturation for large k and the telescoped sums."""
    for n in range(1, max_n + 1):
        lg = floor_lg(n)
        full = Dyadic(0)  # running sum of 2**i zigzag(n/2**i) for i in [1, k]
        tail = Dyadic(0)  # same, restricted to i >= lg + 2
        for k in range(1, ceil_lg(n) + 11):
            term = zigzag(Dyadic(n, k)).mul_pow2(k)
            full += term
            if k >= lg + 2:
                if term != n:
                    return f"n={n} k={k} lhs={term} rhs={n}"
                tail += term
            if k >= lg + 1:
                if tail != n * k - n * (lg + 1):
                    return f"n={n} k={k} lhs={tail} rhs={n * k - n * (lg + 1)}"
                scaled = fractal.takagi_dyadic(Dyadic(n, k)).mul_pow2(k)
                if scaled != full:
                    return f"n={n} k={k} lhs={scaled} rhs={full}"
    return None


def _takagi_points(_max_n: int, _max_m: int) -> Optional[str]:
    for k in range(2, 21):
        at_one = fractal.takagi_dyadic(Dyadic(1, k))
        if at_one != Dyadic(k, k):
            return f"k={k} lhs={at_one} rhs={Dyadic(k, k)}"
        at_three = fractal.takagi_dyadic(Dyadic(3, k))
        if at_three != Dyadic(3 * k - 4, k):
            return f"k={k} lhs={at_three} rhs={Dyadic(3 * k - 4, k)}"
    for p in (1, 2):
        approx = fractal.takagi_approx(p, 3, 30)
        err = abs(approx.value.as_fraction() - Fraction(2, 3))
        if err > approx.error_bound.as_fraction():
            return f"x={p}/3 value={approx.value} off 2/3 by {err}"
    return None


def _tree_structure(max_n: int, _max_m: int) -> Optional[str]:
    for n in range(1, max_n + 1):
        tree = oracle.build_tree(n)
        h = tree.depth
        if h != ceil_lg(n):
            return f"n={n} depth={h} expected={ceil_lg(n)}"
        if tree.leaf_count() != n:
            return f"n={n} leaves={tree.leaf_count()}"
        for i in range(h + 1):
            row = tree.sizes(i)
            if max(row) - min(row) > 1:
                return f"n={n} level={i} size spread > 1"
            if i < h:
                if len(row) != 1 << i:
                    return f"n={n} level={i} width={len(row)} expected={1 << i}"
                if tree.level_comps(i) != n - (1 << i):
                    return f"n={n} level={i} comps={tree.level_comps(i)}"
            expected_next = tuple(
                c for s in row if s >= 2 for c in (s >> 1, (s + 1) >> 1)
            )
            if i < h and expected_next != tree.sizes(i + 1):
                return f"n={n} level={i + 1} children mismatch"
    return None


_CHECKS: dict[str, list[tuple[str, Check]]] = {
    "formulas": [
        ("formulas.best-count-agreement", _best_agreement),
        ("formulas.worst-count-agreement", _worst_agreement),
        ("formulas.level-decomposition", _level_decomposition),
        ("formulas.gap-band", _gap_band),
    ],
    "identities": [
        ("identities.half-window-difference", _halves_identity),
        ("identities.full-window-sum", _window_identity),
    ],
    "oracle": [
        ("oracle.best-case-count", _oracle_best),
        ("oracle.worst-case-count", _oracle_worst),
        ("oracle.random-sandwich", _oracle_random),
    ],
    "takagi": [
        ("takagi.count-bridge", _takagi_bridge),
        ("takagi.mantissa-route", _takagi_mantissa),
        ("takagi.zigzag-scaling", _zigzag_scaling),
        ("takagi.point-values", _takagi_points),
    ],
    "tree": [
        ("tree.structure", _tree_structure),
    ],
}

SUITES = tuple(list(_CHECKS) + ["all"])


def run_suite(suite: str, max_n: int, max_m: int) -> list[CheckResult]:
    """Run every check in a suite; results come back in registration order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    names = list(_CHECKS) if suite == "all" else [suite]
    results = []
    for group in names:
        for name, check in _CHECKS[group]:
            detail = check(max_n, max_m)
            results.append(CheckResult(name=name, ok=detail is None, detail=detail or ""))
    return results
