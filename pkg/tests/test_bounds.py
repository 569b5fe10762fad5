"""Bound formulas against an independent recurrence implementation."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliqueis import (
    DivergenceSignal,
    ParameterError,
    derive_params,
    kj_sequence,
    min_order_lower_bound,
    msystem_size_lower,
    union_floor,
)
from cliqueis.bounds import kj_step


def reference_sequence(n: int, k: int, m: int) -> list[int]:
    """Recurrence re-implemented from scratch as the test oracle."""
    values = [math.ceil(Fraction(k * (k - 1), n - k))]
    for j in range(2, m):
        prev = values[-1]
        values.append(math.ceil(Fraction((k + prev) * (k - j), n - k - prev)))
    return values


class TestGrowthSequence:
    def test_hand_checked_values(self):
        report = kj_sequence(380, 100, 3)
        # k_2 = ceil(9900/280) = 36, k_3 = ceil(136*98/244) = 55
        assert report.values == (36, 55)

    def test_matches_reference_on_grid(self):
        for k in (50, 100, 173):
            for m in (2, 3, 4, 5):
                for n in (4 * k - 3 * m, 4 * k - 3 * m - 17, 3 * k):
                    assert kj_sequence(n, k, m).values == tuple(reference_sequence(n, k, m))

    def test_boundary_example_detects_contradiction(self):
        report = kj_sequence(199, 100, 2)
        assert report.values == (100,)
        assert report.implied_n_lower == 2 * (100 + 100) - 4 == 396
        assert report.implied_n_lower > 199

    def test_floor_checks_for_the_reference_point(self):
        report = kj_sequence(380, 100, 5)
        assert report.values[0] == 36
        for chk in report.floor_checks:
            assert chk.floor == (1 - Fraction(2, chk.j + 1)) * 100
            assert chk.satisfied

    def test_divergence_signal_carries_partial(self):
        with pytest.raises(DivergenceSignal) as exc:
            kj_sequence(150, 100, 3)
        assert exc.value.partial == (198,)
        assert exc.value.denominator <= 0

    def test_preconditions(self):
        with pytest.raises(ParameterError):
            kj_sequence(100, 100, 3)
        with pytest.raises(ParameterError):
            kj_sequence(380, 100, 1)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 5), st.integers(0, 60), st.integers(0, 40))
    def test_floors_hold_in_the_guaranteed_regime(self, m, k_off, n_off):
        k = m**3 + k_off
        n = 4 * k - 3 * m - n_off
        if n <= k:
            return
        try:
            report = kj_sequence(n, k, m)
            checks = report.floor_checks
        except DivergenceSignal as sig:
            checks = [
                type("C", (), {"j": j, "value": v, "satisfied": v >= (1 - Fraction(2, j + 1)) * k})
                for j, v in enumerate(sig.partial, start=2)
            ]
        for chk in checks:
            assert chk.satisfied

    @settings(max_examples=100, deadline=None)
    @given(st.integers(3, 60), st.integers(2, 10), st.integers(0, 30), st.integers(1, 20))
    def test_step_never_decreases_in_its_argument(self, k, j, small, delta):
        if j >= k:
            return
        n = 4 * k
        a = Fraction(small)
        b = a + delta
        if n - k - b <= 0:
            return
        assert kj_step(n, k, j, a) <= kj_step(n, k, j, b)


class TestSystemSizeLower:
    @pytest.mark.parametrize("k", [1, 5, 40])
    def test_single_pair(self, k):
        assert msystem_size_lower([k], [k]) == 2 * k - 1

    def test_two_levels_symbolically(self):
        for k in (10, 50, 100):
            for n in (3 * k, 4 * k - 6):
                k2 = kj_sequence(n, k, 2).values[0]
                assert msystem_size_lower([k, k2], [k, k2]) == 2 * k + 2 * k2 - 4

    def test_vacuous_bound_goes_negative(self):
        assert msystem_size_lower([0], [0]) == -1

    def test_family_lengths_must_match(self):
        with pytest.raises(ParameterError):
            msystem_size_lower([3, 3], [3])


class TestMinOrderLowerBound:
    def test_reference_values(self):
        assert min_order_lower_bound(8, 2) == 12
        assert min_order_lower_bound(27, 3) == 63

    def test_k_below_cube_rejected(self):
        with pytest.raises(ParameterError):
            min_order_lower_bound(7, 2)
        with pytest.raises(ParameterError):
            min_order_lower_bound(8, 1)


class TestDerivedParams:
    def test_delta_one(self):
        p = derive_params(1)
        assert (p.m, p.eps, p.k_min) == (6, Fraction(1, 42), 49)

    def test_delta_half(self):
        p = derive_params(Fraction(1, 2))
        assert (p.m, p.eps, p.k_min) == (14, Fraction(1, 210), 225)

    def test_m_is_strictly_below_the_ratio(self):
        # 8/delta - 1 = 8 exactly: m must drop one below it
        assert derive_params(Fraction(8, 9)).m == 7
        # non-integral ratio: 8/(3/4) - 1 = 29/3, so m = 9
        assert derive_params(Fraction(3, 4)).m == 9

    def test_out_of_range_deltas(self):
        for bad in (4, 0, Fraction(-1, 2), Fraction(3, 2)):
            with pytest.raises(ParameterError):
                derive_params(bad)


class TestUnionFloor:
    def test_values(self):
        assert union_floor(2, 90) == 120  # (2 - 2/3) * 90
        assert union_floor(2, 3) == 4
        assert union_floor(1, 10) == 10

    def test_approaches_twice_k(self):
        assert union_floor(10**6, 50) <= 100

    def test_rejects_nonpositive_round(self):
        with pytest.raises(ParameterError):
            union_floor(0, 5)
