"""Certified series summation and the quadrature cross-check."""

from fractions import Fraction

import pytest

from bernkit.series import (
    SERIES_IDS,
    laplace_monomial,
    partial_sum,
    required_terms,
    series_limit,
    series_sweep,
    tail_bound,
)

TG3_POINTS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
TG4_POINTS = (Fraction(5, 8), Fraction(3, 4), Fraction(1))
GRID = {"TG3": TG3_POINTS, "TG4": TG4_POINTS}


class TestDomains:
    def test_tg3_requires_open_unit_interval(self):
        for bad in (Fraction(0), Fraction(1), Fraction(-1, 2), Fraction(3, 2)):
            with pytest.raises(ValueError):
                partial_sum("TG3", 0, bad, 10)

    def test_tg4_requires_upper_half_interval(self):
        for bad in (Fraction(1, 2), Fraction(1, 4), Fraction(9, 8), Fraction(0)):
            with pytest.raises(ValueError):
                partial_sum("TG4", 0, bad, 10)

    def test_unknown_series_rejected(self):
        with pytest.raises(ValueError):
            partial_sum("TG9", 0, Fraction(1, 2), 10)

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            partial_sum("TG3", -1, Fraction(1, 2), 10)


class TestLimits:
    def test_tg3_limit_is_reciprocal(self):
        assert series_limit("TG3", 1, Fraction(3, 4)) == Fraction(4, 3)

    def test_tg4_limit_is_signed_power(self):
        assert series_limit("TG4", 1, Fraction(1)) == -1
        assert series_limit("TG4", 2, Fraction(3, 4)) == Fraction(9, 16)

    def test_tg4_at_endpoint_collapses(self):
        # At x=1 only the n=k term survives, giving the limit exactly.
        check = partial_sum("TG4", 1, Fraction(1), 10)
        assert check.partial_sum == -1 == check.limit
        assert check.tail_bound == 0


class TestTailBounds:
    def test_halving_point_bound_is_explicit(self):
        # Index 0 at x=1/2: bound after N terms is exactly 2^-N.
        assert tail_bound("TG3", 0, Fraction(1, 2), 40) == Fraction(1, 2**40)

    @pytest.mark.parametrize("series_id", SERIES_IDS)
    def test_bound_dominates_true_error_everywhere(self, series_id):
        for k in range(4):
            for x in GRID[series_id]:
                for check in series_sweep(series_id, k, x, 80):
                    assert check.error <= check.tail_bound, (series_id, k, x, check.terms_used)

    @pytest.mark.parametrize("series_id", SERIES_IDS)
    def test_bound_eventually_decreases_monotonically(self, series_id):
        for k in range(4):
            for x in GRID[series_id]:
                bounds = [c.tail_bound for c in series_sweep(series_id, k, x, 60)]
                tail = bounds[4 * k + 8 :]
                assert all(b1 >= b2 for b1, b2 in zip(tail, tail[1:]))

    def test_prefix_property(self):
        # Recomputing with more terms only appends; earlier sums are unchanged.
        sweep = series_sweep("TG3", 2, Fraction(1, 4), 50)
        for n in (0, 5, 17, 49):
            assert sweep[n].partial_sum == partial_sum("TG3", 2, Fraction(1, 4), n).partial_sum

    def test_tg3_partial_sums_increase_to_limit(self):
        sweep = series_sweep("TG3", 1, Fraction(1, 2), 60)
        sums = [c.partial_sum for c in sweep]
        assert all(s1 <= s2 for s1, s2 in zip(sums, sums[1:]))
        assert all(c.partial_sum <= c.limit for c in sweep)


class TestRequiredTerms:
    def test_explicit_halving_case(self):
        # Bound 2^-N <= 1e-6 first holds at N = 20.
        assert required_terms("TG3", 0, Fraction(1, 2), "1e-6") == 20

    def test_loose_tolerance_stops_at_first_index(self):
        assert required_terms("TG3", 2, Fraction(1, 2), 10**6) == 2

    def test_posterior_error_within_tolerance(self):
        eps = Fraction(1, 10**9)
        for series_id in SERIES_IDS:
            for k in range(3):
                for x in GRID[series_id]:
                    n = required_terms(series_id, k, x, eps)
                    check = partial_sum(series_id, k, x, n)
                    assert check.error <= eps

    def test_nonpositive_eps_rejected(self):
        with pytest.raises(ValueError):
            required_terms("TG3", 0, Fraction(1, 2), 0)


class TestLaplaceQuadrature:
    def test_unit_case(self):
        res = laplace_monomial(0, Fraction(1), steps=20_000)
        assert res.exact == 1
        assert abs(res.approx - 1.0) < 1e-9

    def test_first_moment(self):
        res = laplace_monomial(1, Fraction(1), steps=20_000)
        assert res.exact == 1

    def test_scaled_case(self):
        res = laplace_monomial(2, Fraction(2), steps=20_000)
        assert res.exact == Fraction(1, 4)
        assert res.relative_error < 1e-8

    def test_error_decreases_with_steps(self):
        coarse = laplace_monomial(3, Fraction(1, 2), steps=200)
        fine = laplace_monomial(3, Fraction(1, 2), steps=20_000)
        assert fine.relative_error < coarse.relative_error

    def test_invalid_inputs_rejected(self):
        with pytest.raises(ValueError):
            laplace_monomial(0, Fraction(0))
        with pytest.raises(ValueError):
            laplace_monomial(-1, Fraction(1))
        with pytest.raises(ValueError):
            laplace_monomial(0, Fraction(1), steps=0)
        with pytest.raises(ValueError):
            laplace_monomial(0, Fraction(1), horizon=-1.0)

    def test_json_payload_roundtrips(self):
        res = laplace_monomial(2, Fraction(1, 2), steps=1_000)
        payload = res.to_json_dict()
        assert Fraction(payload["exact"]) == res.exact
        assert payload["steps"] == 1_000
