"""Count formulas against brute-force oracles and each other."""

from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from mergecomps import counts
from mergecomps.dyadic import Dyadic, floor_lg


@lru_cache(maxsize=None)
def naive_best(n: int) -> int:
    """Literal recurrence, the slow way, as an independent implementation."""
    if n == 1:
        return 0
    return n // 2 + naive_best(n // 2) + naive_best((n + 1) // 2)


# Hand-unfolded recurrence values.
BEST_TABLE = {1: 0, 2: 1, 3: 2, 4: 4, 5: 5, 6: 7, 7: 9, 8: 12,
              9: 13, 10: 15, 11: 17, 12: 20, 13: 22, 14: 25, 15: 28, 16: 32}

# Hand-summed ceil(lg i) prefix sums.
WORST_TABLE = {1: 0, 2: 1, 3: 3, 4: 5, 5: 8, 6: 11, 7: 14, 8: 17, 9: 21}


class TestBestComps:
    @pytest.mark.parametrize("n, expected", sorted(BEST_TABLE.items()))
    def test_frozen_values(self, n, expected):
        assert counts.best_comps(n) == expected

    @given(st.integers(1, 100_000))
    @settings(max_examples=300)
    def test_matches_naive_recurrence(self, n):
        assert counts.best_comps(n) == naive_best(n)

    def test_large_argument_stays_cheap(self):
        n = (1 << 200) + 12345  # far beyond any dense table
        b = counts.best_comps(n)
        assert b == n // 2 + counts.best_comps(n // 2) + counts.best_comps((n + 1) // 2)

    @pytest.mark.parametrize("fn", [counts.best_comps, counts.best_comps_zigzag,
                                    counts.best_comps_ceil])
    def test_rejects_zero(self, fn):
        with pytest.raises(ValueError):
            fn(0)


class TestClosedForms:
    @pytest.mark.parametrize("n, expected", [(5, 5), (1, 0), (16, 32)])
    def test_zigzag_form_examples(self, n, expected):
        assert counts.best_comps_zigzag(n) == expected

    @pytest.mark.parametrize("n, expected", [(5, 5), (2, 1), (7, 9)])
    def test_ceil_form_examples(self, n, expected):
        assert counts.best_comps_ceil(n) == expected

    def test_triple_agreement(self):
        for n in range(1, 2049):
            b = counts.best_comps(n)
            assert counts.best_comps_zigzag(n) == b
            assert counts.best_comps_ceil(n) == b

    @given(st.integers(1, 1 << 40))
    @settings(max_examples=200)
    def test_triple_agreement_large(self, n):
        assert counts.best_comps_zigzag(n) == counts.best_comps(n)
        assert counts.best_comps_ceil(n) == counts.best_comps(n)


class TestWorstComps:
    @pytest.mark.parametrize("n, expected", sorted(WORST_TABLE.items()))
    def test_frozen_values(self, n, expected):
        assert counts.worst_comps(n) == expected
        assert counts.worst_comps_sum(n) == expected

    @pytest.mark.parametrize("n, expected", [(1, 0), (4, 5), (5, 8)])
    def test_closed_examples(self, n, expected):
        assert counts.worst_comps(n) == expected

    @pytest.mark.parametrize("n, expected", [(3, 3), (5, 8), (1, 0)])
    def test_sum_examples(self, n, expected):
        assert counts.worst_comps_sum(n) == expected

    def test_agreement(self):
        for n in range(1, 2049):
            assert counts.worst_comps(n) == counts.worst_comps_sum(n)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            counts.worst_comps(0)
        with pytest.raises(ValueError):
            counts.worst_comps_sum(0)


class TestLevelComps:
    @pytest.mark.parametrize("n, k, expected", [(5, 0, 2), (5, 2, 1), (8, 0, 4)])
    def test_examples(self, n, k, expected):
        assert counts.level_comps(n, k) == expected

    @given(st.integers(1, 3000))
    @settings(max_examples=150)
    def test_closed_equals_direct_sum(self, n):
        for k in range(floor_lg(n) + 1):
            direct = sum((n + i) // (1 << (k + 1)) for i in range(1 << k))
            assert counts.level_comps(n, k) == direct

    @given(st.integers(1, 100_000))
    @settings(max_examples=150)
    def test_levels_sum_to_best(self, n):
        total = sum(counts.level_comps(n, k) for k in range(floor_lg(n) + 1))
        assert total == counts.best_comps(n)

    def test_rejects_out_of_range_level(self):
        with pytest.raises(ValueError):
            counts.level_comps(5, 3)  # floor_lg(5) == 2
        with pytest.raises(ValueError):
            counts.level_comps(5, -1)


class TestFloorSumIdentities:
    @pytest.mark.parametrize("n, m, lhs, rhs", [(3, 2, 1, 1), (0, 4, 0, 0), (5, 1, 1, 1)])
    def test_halves_examples(self, n, m, lhs, rhs):
        got_lhs, got_rhs = counts.floor_sum_halves(n, m)
        assert got_lhs == lhs
        assert got_rhs == Dyadic(rhs)

    @given(st.integers(0, 4000), st.integers(1, 200))
    @settings(max_examples=300)
    def test_halves_identity(self, n, m):
        lhs, rhs = counts.floor_sum_halves(n, m)
        assert rhs == lhs
        # the reported right-hand side really is 2m * zigzag(n/2m)
        f = Fraction(n, 2 * m)
        assert rhs.as_fraction() == 2 * m * min(f - (f.numerator // f.denominator),
                                                1 - f + (f.numerator // f.denominator))

    @pytest.mark.parametrize("n, m, expected", [(5, 3, 5), (0, 7, 0), (6, 1, 6)])
    def test_window_examples(self, n, m, expected):
        assert counts.floor_sum_window(n, m) == expected

    @given(st.integers(0, 100_000), st.integers(1, 300))
    @settings(max_examples=300)
    def test_window_identity(self, n, m):
        assert counts.floor_sum_window(n, m) == n

    def test_reject_m_zero(self):
        with pytest.raises(ValueError):
            counts.floor_sum_halves(3, 0)
        with pytest.raises(ValueError):
            counts.floor_sum_window(3, 0)


class TestGap:
    @pytest.mark.parametrize("n, expected", [(8, 7), (5, 2), (1, 0)])
    def test_examples(self, n, expected):
        assert counts.best_worst_gap(n) == expected

    def test_band_and_equality_cases(self):
        witnesses = set(counts.gap_lower_witnesses(20))
        for n in range(1, 4097):
            gap = counts.best_worst_gap(n)
            assert n - 1 <= 2 * gap <= 2 * (n - 1)
            assert (gap == n - 1) == (n & (n - 1) == 0)
            assert (2 * gap == n - 1) == (n in witnesses)

    def test_witnesses(self):
        assert counts.gap_lower_witnesses(8) == [1, 3, 5, 11, 21, 43, 85, 171]

    def test_monotone_growth(self):
        prev_b = prev_w = 0
        for n in range(1, 4097):
            b, w = counts.best_comps(n), counts.worst_comps(n)
            assert b >= prev_b and w >= prev_w
            assert b <= w
            prev_b, prev_w = b, w


class TestDigitSum:
    @pytest.mark.parametrize("n, expected", [(1, 0), (5, 5), (8, 12)])
    def test_examples(self, n, expected):
        assert counts.digit_sum(n) == expected

    def test_equals_best_comps(self):
        for n in range(1, 4097):
            assert counts.digit_sum(n) == counts.best_comps(n)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            counts.digit_sum(0)


class TestAnalyze:
    def test_example_rows(self):
        assert counts.analyze(5) == counts.AnalysisRow(5, 5, 8, Dyadic(2), 2, 5)
        assert counts.analyze(1) == counts.AnalysisRow(1, 0, 0, Dyadic(0), 0, 0)
        assert counts.analyze(4) == counts.AnalysisRow(4, 4, 5, Dyadic(0), 3, 4)

    @given(st.integers(1, 5000))
    @settings(max_examples=100)
    def test_cross_invariants(self, n):
        row = counts.analyze(n)
        assert row.two_b_minus_w == 2 * row.best - row.worst
        assert row.digit_sum == row.best
        assert row.best <= row.worst
        assert Dyadic(row.n - 1) - row.fractal_at_n == row.two_b_minus_w

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            counts.analyze(0)
