"""Comparison-count formulas for top-down MergeSort.

The minimum count ``best_comps`` is computed three independent ways (the
divide-and-conquer recurrence, and two logarithmic-length triangle-wave
sums), the maximum count ``worst_comps`` two ways, and both connect to the
total number of 1-bits below n (``digit_sum``) and to per-recursion-level
sums.  Every formula evaluator works in exact dyadic arithmetic and raises
rather than rounding if a result that must be an integer is not.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyadic import Dyadic, ceil_lg, floor_lg, zigzag


def _require_positive(n: int, what: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{what} must be >= 1, got {n}")


def best_comps(n: int) -> int:
    """Minimum number of key comparisons MergeSort performs on n keys.

    Solves B(1) = 0, B(n) = floor(n/2) + B(floor(n/2)) + B(ceil(n/2))
    bottom-up.  Only sizes reachable from n are tabulated -- at most two per
    halving level -- so arbitrarily large n stay cheap.  This is the
    reference oracle the closed-form evaluators are checked against.
    """
    _require_positive(n)
    memo = {0: 0, 1: 0}
    for k in range(ceil_lg(n), -1, -1):
        for s in (n >> k, -((-n) >> k)):
            if s >= 2 and s not in memo:
                memo[s] = (s >> 1) + memo[s >> 1] + memo[(s + 1) >> 1]
    return memo[n]


def best_comps_zigzag(n: int) -> int:
    """Minimum comparison count as a floor(lg n)+1 term triangle-wave sum.

    Evaluates (n/2)(floor(lg n)+1) - sum over k in [0, floor(lg n)] of
    2**k * zigzag(n / 2**(k+1)), exactly.
    """
    _require_positive(n)
    total = Dyadic(n * (floor_lg(n) + 1), 1)
    for k in range(floor_lg(n) + 1):
        total -= zigzag(Dyadic(n, k + 1)).mul_pow2(k)
    return total.as_integer()


def best_comps_ceil(n: int) -> int:
    """Minimum comparison count via the ceiling-log variant.

    Evaluates n*ceil(lg n)/2 - (1/2) * sum over k in [1, ceil(lg n)] of
    2**k * zigzag(n / 2**k), exactly.
    """
    _require_positive(n)
    h = ceil_lg(n)
    total = Dyadic(n * h, 1)
    for k in range(1, h + 1):
        total -= zigzag(Dyadic(n, k)).mul_pow2(k - 1)
    return total.as_integer()


def worst_comps(n: int) -> int:
    """Maximum comparison count, closed form n*ceil(lg n) - 2**ceil(lg n) + 1."""
    _require_positive(n)
    h = ceil_lg(n)
    return n * h - (1 << h) + 1


def worst_comps_sum(n: int) -> int:
    """Maximum comparison count as the direct sum of ceil(lg i) for i in [1, n]."""
    _require_positive(n)
    return sum(ceil_lg(i) for i in range(1, n + 1))


def level_comps(n: int, k: int) -> int:
    """Best-case comparisons contributed by recursion level k.

    Closed form n/2 - 2**k * zigzag(n / 2**(k+1)), which equals the direct
    sum of floor((n+i) / 2**(k+1)) for i in [0, 2**k).  Levels beyond
    floor(lg n) are rejected; they contribute nothing.
    """
    _require_positive(n)
    if k < 0 or k > floor_lg(n):
        raise ValueError(f"level k must be in [0, floor_lg(n)] = [0, {floor_lg(n)}], got {k}")
    value = Dyadic(n, 1) - zigzag(Dyadic(n, k + 1)).mul_pow2(k)
    return value.as_integer()


def floor_sum_halves(n: int, m: int) -> tuple[int, Dyadic]:
    """Difference of floor sums over the upper and lower half-windows.

    Returns (lhs, rhs) where lhs sums floor((n+i)/2m) for i in [m, 2m) minus
    the same sum for i in [0, m), by direct summation, and rhs is the exact
    value 2m * zigzag(n / 2m).  The two agree for every n >= 0, m >= 1.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _require_positive(m, "m")
    two_m = 2 * m
    lhs = sum((n + i) // two_m for i in range(m, two_m)) - sum(
        (n + i) // two_m for i in range(m)
    )
    r = n % two_m
    rhs = Dyadic(min(r, two_m - r))  # == 2m * zigzag(n/2m), always an integer
    return lhs, rhs


def floor_sum_window(n: int, m: int) -> int:
    """Direct sum of floor((n+i)/m) for i in [0, m); always equals n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _require_positive(m, "m")
    return sum((n + i) // m for i in range(m))


def best_worst_gap(n: int) -> int:
    """2 * best_comps(n) - worst_comps(n).

    Always lies in [(n-1)/2, n-1]; hits n-1 exactly at powers of two and
    (n-1)/2 on the alternating witnesses from :func:`gap_lower_witnesses`.
    """
    _require_positive(n)
    return 2 * best_comps(n) - worst_comps(n)


def gap_lower_witnesses(k_max: int) -> list[int]:
    """Sizes n = (2**(k+1) + (-1)**k) / 3 for k in [0, k_max], deduplicated.

    On these n the gap 2*best - worst attains its lower bound (n-1)/2.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    out: list[int] = []
    for k in range(k_max + 1):
        value = (1 << (k + 1)) + (1 if k % 2 == 0 else -1)
        if value % 3 == 0:
            n = value // 3
            if not out or out[-1] != n:
                out.append(n)
    return out


def digit_sum(n: int) -> int:
    """Total number of 1-bits in the binary expansions of 0 < i < n.

    Direct popcount summation; the brute-force oracle for the equivalence
    with best_comps.
    """
    _require_positive(n)
    return sum(i.bit_count() for i in range(1, n))


@dataclass(frozen=True)
class AnalysisRow:
    """One tabulated size: counts, the residual, and the bit total."""

    n: int
    best: int
    worst: int
    fractal_at_n: Dyadic
    two_b_minus_w: int
    digit_sum: int


def analyze(n: int) -> AnalysisRow:
    """Bundle every per-size quantity, each from its own evaluator."""
    from .fractal import zigzag_sum  # deferred: fractal depends on best_comps

    _require_positive(n)
    row = AnalysisRow(
        n=n,
        best=best_comps(n),
        worst=worst_comps(n),
        fractal_at_n=zigzag_sum(Dyadic(n)),
        two_b_minus_w=best_worst_gap(n),
        digit_sum=digit_sum(n),
    )
    if row.two_b_minus_w != 2 * row.best - row.worst:
        raise ArithmeticError(f"gap mismatch at n={n}")
    if Dyadic(n - 1) - row.fractal_at_n != row.two_b_minus_w:
        raise ArithmeticError(f"residual identity violated at n={n}")
    return row
