"""Tests for truncated power series and the generating-function checks."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harmonum import sequences
from harmonum.exact import LAM, LamPoly, int_binomial
from harmonum.series import (
    Series,
    Series2,
    bivariate_deg_harmonic_check,
    bivariate_deg_harmonic_sides,
    bivariate_derangement_check,
    bivariate_derangement_sides,
    bivariate_harmonic_check,
    bivariate_harmonic_sides,
    deg_log_series,
    exp_neg_t,
    geometric,
    geometric_xy,
    gf_deg_harmonic_check,
    gf_deg_hyperharmonic_check,
    gf_derangement_check,
    gf_harmonic_check,
    gf_hyperharmonic_check,
    log_inv_one_minus_t,
    one_minus_t_pow_lambda,
    pow_inv_one_minus_t,
)

small_fractions = st.fractions(min_value=-9, max_value=9, max_denominator=6)


@st.composite
def series_triple(draw, coeff_st, max_order):
    order = draw(st.integers(min_value=0, max_value=max_order))

    def one():
        return Series([draw(coeff_st) for _ in range(order + 1)])

    return one(), one(), one()


small_polys = st.lists(small_fractions, max_size=3).map(LamPoly)


class TestSeriesArithmetic:
    def test_order_and_access(self):
        s = Series([1, 2, 3])
        assert s.order == 2
        assert s[1] == 2
        assert s.coefficient(2) == 3

    def test_requires_constant_coefficient(self):
        with pytest.raises(ValueError):
            Series([])

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            geometric(3) + geometric(4)
        with pytest.raises(ValueError):
            geometric(3) * geometric(4)

    def test_scalar_multiplication(self):
        assert Fraction(1, 2) * geometric(3) == Series([Fraction(1, 2)] * 4)
        assert geometric(3) * 2 == Series([2] * 4)

    @given(series_triple(small_fractions, max_order=30))
    @settings(max_examples=30, deadline=None)
    def test_ring_laws_rational(self, triple):
        a, b, c = triple
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)

    @given(series_triple(small_polys, max_order=8))
    @settings(max_examples=20, deadline=None)
    def test_ring_laws_polynomial(self, triple):
        a, b, c = triple
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


class TestConstructors:
    def test_geometric(self):
        assert geometric(2).coeffs == (1, 1, 1)
        one_minus_t = Series([1, -1] + [0] * 9)
        unit = Series([1] + [0] * 10)
        assert geometric(10) * one_minus_t == unit

    def test_pow_inv_one_minus_t(self):
        assert pow_inv_one_minus_t(0, 4) == Series([1, 0, 0, 0, 0])
        assert pow_inv_one_minus_t(1, 20) == geometric(20)
        geo = geometric(12)
        assert pow_inv_one_minus_t(2, 12) == geo * geo
        assert pow_inv_one_minus_t(3, 12) == geo * geo * geo
        assert pow_inv_one_minus_t(3, 12).coefficient(2) == 6
        for n in range(13):
            assert pow_inv_one_minus_t(2, 12).coefficient(n) == n + 1

    def test_log_series(self):
        s = log_inv_one_minus_t(8)
        assert s.coefficient(0) == 0
        assert s.coefficient(1) == 1
        assert s.coefficient(4) == Fraction(1, 4)
        # termwise derivative of log(1/(1-t)) is 1/(1-t)
        for n in range(8):
            assert (n + 1) * s.coefficient(n + 1) == 1

    def test_exp_neg(self):
        s = exp_neg_t(10)
        assert s.coefficient(0) == 1
        assert s.coefficient(3) == Fraction(-1, 6)
        exp_pos = Series(Fraction(1, math.factorial(n)) for n in range(11))
        assert s * exp_pos == Series([1] + [0] * 10)

    def test_binomial_series(self):
        s = one_minus_t_pow_lambda(6)
        assert s.coefficient(0) == 1
        assert s.coefficient(1) == -LAM
        assert s.coefficient(2) == LamPoly((0, Fraction(-1, 2), Fraction(1, 2)))
        # specializing the exponent to an integer recovers (1-t)^k
        for k in range(5):
            for n in range(7):
                expected = (-1) ** n * int_binomial(k, n)
                assert s.coefficient(n).evaluate(k) == expected

    def test_deg_log_series(self):
        s = deg_log_series(8)
        assert s.coefficient(0).is_zero()
        assert s.coefficient(1) == 1
        assert s.coefficient(2) == LamPoly((Fraction(1, 2), Fraction(-1, 2)))
        for n in range(1, 6):
            assert s.coefficient(n).constant_term == Fraction(1, n)

    def test_deg_log_series_alternate_form(self):
        # oracle: (-1)^(n-1) * binom(L, n) / L computed independently
        from harmonum.exact import lpoly_binomial, lpoly_exact_div

        s = deg_log_series(12)
        for n in range(1, 13):
            alt = lpoly_exact_div(lpoly_binomial(LAM, n), LAM)
            if n % 2 == 0:
                alt = -alt
            assert s.coefficient(n) == alt

    @pytest.mark.parametrize(
        "make",
        [
            geometric,
            log_inv_one_minus_t,
            exp_neg_t,
            one_minus_t_pow_lambda,
            deg_log_series,
            lambda order: pow_inv_one_minus_t(3, order),
        ],
    )
    def test_truncation_coherence(self, make):
        assert make(24).truncate(10) == make(10)

    def test_truncate_validates(self):
        with pytest.raises(ValueError):
            geometric(5).truncate(6)


class TestUnivariateChecks:
    def test_derangement_gf(self):
        report = gf_derangement_check(12)
        assert report.passed
        prod = geometric(12) * exp_neg_t(12)
        d = sequences.derangements(12)
        for n in range(13):
            assert math.factorial(n) * prod.coefficient(n) == d[n]

    def test_harmonic_gf(self):
        assert gf_harmonic_check(30).passed
        prod = geometric(4) * log_inv_one_minus_t(4)
        assert prod.coefficient(2) == Fraction(3, 2)

    def test_hyperharmonic_gf(self):
        for r in range(4):
            assert gf_hyperharmonic_check(20, r).passed
        # r = 0 leaves the bare log series
        prod = pow_inv_one_minus_t(0, 10) * log_inv_one_minus_t(10)
        assert prod == log_inv_one_minus_t(10)
        # r = 1 coincides with the plain harmonic product
        assert pow_inv_one_minus_t(1, 15) * log_inv_one_minus_t(15) == geometric(
            15
        ) * log_inv_one_minus_t(15)

    def test_deg_harmonic_gf_matches_table(self):
        assert gf_deg_harmonic_check(60).passed
        prod = geometric(60) * deg_log_series(60)
        dh = sequences.degenerate_harmonics(60)
        for n in range(61):
            assert prod.coefficient(n) == dh[n]

    def test_deg_hyperharmonic_gf(self):
        for r in range(4):
            assert gf_deg_hyperharmonic_check(16, r).passed

    def test_prefix_sum_shadow(self):
        # multiplying by 1/(1-t) raises the iteration order by one
        log = log_inv_one_minus_t(100)
        geo = geometric(100)
        for r in range(6):
            lower = pow_inv_one_minus_t(r, 100) * log
            higher = pow_inv_one_minus_t(r + 1, 100) * log
            assert geo * lower == higher, r

    def test_failure_reports_first_mismatch(self):
        produced = geometric(6) * exp_neg_t(6)
        from harmonum.series import _series_report

        doctored = list(produced.coeffs)
        doctored[4] += 1
        report = _series_report("doctored", (), Series(doctored), produced)
        assert not report.passed
        assert report.first_diff == 4


class TestBivariate:
    def test_triangle_shape_enforced(self):
        with pytest.raises(ValueError):
            Series2([(1, 2), (3, 4)])

    def test_build_and_access(self):
        s = geometric_xy(4)
        assert s.order == 4
        assert s.coefficient(2, 2) == 6
        assert s.coefficient(0, 0) == 1

    def test_truncation(self):
        assert geometric_xy(10).truncate(4) == geometric_xy(4)

    def test_derangement_sides(self):
        lhs, rhs = bivariate_derangement_sides(8)
        assert lhs.coefficient(0, 0) == 1
        assert lhs.coefficient(1, 1) == 1  # d(2)/(1!*1!)
        assert rhs.coefficient(1, 1) == 1
        assert bivariate_derangement_check(8).passed

    def test_harmonic_sides(self):
        lhs, rhs = bivariate_harmonic_sides(8)
        assert lhs.coefficient(0, 0) == 0
        assert lhs.coefficient(1, 1) == 3
        assert rhs.coefficient(1, 1) == 3
        assert bivariate_harmonic_check(8).passed

    def test_deg_harmonic_sides(self):
        lhs, rhs = bivariate_deg_harmonic_sides(6)
        assert lhs.coefficient(1, 1) == 3 - LAM
        assert rhs.coefficient(1, 1) == 3 - LAM
        assert bivariate_deg_harmonic_check(6).passed

    def test_constant_projection_reproduces_harmonic_case(self):
        order = 8
        plhs, prhs = bivariate_deg_harmonic_sides(order)
        qlhs, qrhs = bivariate_harmonic_sides(order)

        def project(s):
            return Series2.build(
                s.order, lambda i, j: s.coefficient(i, j).constant_term
            )

        assert project(plhs) == qlhs
        assert project(prhs) == qrhs

    def test_failure_reports_location(self):
        from harmonum.series import _series2_report

        good = geometric_xy(3)
        doctored = Series2.build(
            3, lambda i, j: good.coefficient(i, j) + (1 if (i, j) == (1, 2) else 0)
        )
        report = _series2_report("doctored", (), doctored, good)
        assert not report.passed
        assert "x^1*y^2" in report.lhs
