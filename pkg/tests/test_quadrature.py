"""Quadrature route: the integrator on known integrals, then every identity."""

import itertools
import math
from fractions import Fraction

import mpmath
import pytest

from special import GompertzParams, grosset_veselov_exact, gumbel_pdf, sech2
from utils import DomainError
from verification import (
    boundary_decay,
    gumbel_integrand,
    gumbel_rhs,
    integrate_half_line,
    integrate_interval,
    integrate_real_line,
    moment_by_substitution,
    moment_exact,
    soliton_integrand,
    verify_egf_moment,
    verify_general_derivative_integral,
    verify_grosset_veselov_quadrature,
    verify_gumbel_bernoulli_quadrature,
    verify_log_moment_quadrature,
    verify_moment_quadrature,
)
from verification.quadrature import egf_moment_series

PARAM_GRID = list(itertools.product((0.5, 1, 2), (0.5, 1, 3), (1, 2, 5)))


def _mp(x):
    return mpmath.mpf(x.numerator) / x.denominator


class TestIntegrator:

    def test_gaussian(self):
        result = integrate_real_line(lambda x: math.exp(-x * x))
        assert result.value == pytest.approx(math.sqrt(math.pi), abs=1e-12)
        assert result.error_estimate <= 1e-10
        assert result.evaluations > 0

    def test_gumbel_pdf_squared(self):
        result = integrate_real_line(lambda t: gumbel_pdf(t) ** 2)
        assert result.value == pytest.approx(0.25, abs=1e-11)

    def test_sech_fourth_power(self):
        result = integrate_real_line(lambda x: sech2(x) ** 2)
        assert result.value == pytest.approx(4 / 3, abs=1e-11)

    def test_half_line_exponential(self):
        assert integrate_half_line(lambda x: math.exp(-x)).value == pytest.approx(1, abs=1e-12)

    def test_interval_with_endpoint_singularity(self):
        result = integrate_interval(lambda x: 1 / math.sqrt(x), 0, 1)
        assert result.value == pytest.approx(2, abs=1e-10)

    def test_extended_precision(self):
        with mpmath.workdps(40):
            result = integrate_real_line(lambda x: mpmath.exp(-x * x), tol=1e-30, ctx=mpmath.mp)
            assert abs(result.value - mpmath.sqrt(mpmath.pi)) < mpmath.mpf("1e-28")


class TestErrorEstimates:

    @pytest.mark.parametrize("k", range(1, 7))
    def test_gumbel_estimate_bounds_error(self, k):
        with mpmath.workdps(40):
            result = integrate_half_line(gumbel_integrand(k, mpmath.mp), 1e-10, mpmath.mp)
            assert abs(result.value - _mp(gumbel_rhs(k))) <= result.error_estimate

    @pytest.mark.parametrize("k", range(1, 7))
    def test_soliton_estimate_bounds_error(self, k):
        with mpmath.workdps(40):
            result = integrate_real_line(soliton_integrand(k, mpmath.mp), 1e-10, mpmath.mp)
            assert abs(result.value - _mp(grosset_veselov_exact(k))) <= result.error_estimate

    def test_evaluation_counts_repeat(self):
        for k in (1, 4, 6):
            first = integrate_half_line(gumbel_integrand(k), 1e-10)
            second = integrate_half_line(gumbel_integrand(k), 1e-10)
            assert first.evaluations == second.evaluations
            assert first.value == second.value
        first = integrate_real_line(soliton_integrand(3), 1e-10)
        assert integrate_real_line(soliton_integrand(3), 1e-10) == first


class TestGumbelQuadrature:

    @pytest.mark.parametrize("k", range(1, 7))
    def test_double_precision(self, k):
        report = verify_gumbel_bernoulli_quadrature(k, 1e-10, "double")
        assert report.passed, report
        assert report.abs_error <= 1e-10
        assert report.route == "quadrature"

    @pytest.mark.parametrize("k", range(1, 11))
    def test_extended_precision(self, k):
        report = verify_gumbel_bernoulli_quadrature(k, 1e-10, "extended")
        assert report.passed, report

    def test_double_precision_limit(self):
        with pytest.raises(DomainError):
            verify_gumbel_bernoulli_quadrature(7, 1e-10, "double")

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            verify_gumbel_bernoulli_quadrature(11)


class TestSolitonQuadrature:

    @pytest.mark.parametrize("k", range(1, 7))
    def test_agrees_with_exact(self, k):
        report = verify_grosset_veselov_quadrature(k, 1e-10)
        assert report.passed, report

    def test_double_precision(self):
        for k in range(1, 4):
            assert verify_grosset_veselov_quadrature(k, 1e-10, "double").passed


class TestGeneralDerivativeIntegral:

    @pytest.mark.parametrize("q, c, u_max", PARAM_GRID)
    def test_parameter_grid(self, q, c, u_max):
        for k in range(1, 5):
            report = verify_general_derivative_integral(k, GompertzParams(q, c, u_max), 1e-8)
            assert report.passed, report
            assert report.parameter == (k, q, c, u_max)

    def test_independent_of_shape(self):
        for k in range(1, 5):
            values = [
                verify_general_derivative_integral(k, GompertzParams(1.5, c, 2), 1e-8).computed
                for c in (0.5, 1, 3, 7)
            ]
            assert max(values) - min(values) <= 1e-8

    def test_boundary_terms_vanish(self):
        assert boundary_decay(4, GompertzParams(0.5, 3, 5), ctx=mpmath.mp) < 1e-10

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            verify_general_derivative_integral(9, GompertzParams())


class TestMomentQuadrature:

    def test_moments(self):
        for n in range(0, 7):
            for params in (GompertzParams(), GompertzParams(2, 3, 5)):
                report = verify_moment_quadrature(n, params, 1e-10)
                assert report.passed, report

    def test_first_moment_value(self):
        report = verify_moment_quadrature(1, GompertzParams(2, 1, 1), 1e-10)
        # integral of (u')^2 dt = q u_max^2 / 4
        assert float(report.computed) == pytest.approx(0.5, abs=1e-10)


class TestMomentSubstitution:

    @pytest.mark.parametrize("n", range(0, 6))
    def test_matches_exact_moment(self, n):
        params = GompertzParams(2, 3, 5)
        with mpmath.workdps(40):
            result = moment_by_substitution(n, params, 1e-12, mpmath.mp)
            expected = (-2) ** n * _mp(moment_exact(n, Fraction(5)))
            assert abs(result.value - expected) < mpmath.mpf("1e-10")

    def test_double_precision(self):
        result = moment_by_substitution(1, GompertzParams(2, 1, 1), 1e-10)
        assert result.value == pytest.approx(0.5, abs=1e-10)

    def test_independent_of_shape(self):
        values = [moment_by_substitution(2, GompertzParams(1.5, c, 2), 1e-10).value for c in (0.5, 1, 3)]
        assert max(values) - min(values) <= 1e-9


class TestLogMomentQuadrature:

    def test_unit_level(self):
        for n in range(0, 9):
            assert verify_log_moment_quadrature(n, 1, 1e-10).passed

    def test_rational_level(self):
        report = verify_log_moment_quadrature(3, Fraction(5, 2), 1e-10)
        assert report.passed, report
        assert report.expected == Fraction(6, 16) * Fraction(25, 4)


class TestEgfMoment:

    def test_closed_form(self):
        for z in (-0.7, 0.0, 0.3, 1.2):
            report = verify_egf_moment(z, GompertzParams(2, 3, 5), 1e-10)
            assert report.passed, report

    def test_series_matches_closed_form_inside_radius(self):
        params = GompertzParams(1, 1, 2)
        with mpmath.workdps(40):
            series = egf_moment_series(mpmath.mpf("0.5"), params, ctx=mpmath.mp)
            closed = 4 / (mpmath.exp(-mpmath.mpf("0.5")) + 1)
            assert abs(series - closed) < mpmath.mpf("1e-15")
