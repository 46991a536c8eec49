"""Tests for the sech^2 derivative polynomials."""

from fractions import Fraction

import mpmath
import pytest

from special import bernoulli, grosset_veselov_exact, sech2, sech2_derivative
from special.soliton import grosset_veselov_bernoulli
from utils import DomainError


class TestSech2Derivative:

    def test_low_orders(self):
        assert sech2_derivative(0).coeffs == (Fraction(1),)
        assert sech2_derivative(1).coeffs == (Fraction(0), Fraction(-2))
        # (sech^2)'' = sech^2 (6 tanh^2 - 2)
        assert sech2_derivative(2).coeffs == (Fraction(-2), Fraction(0), Fraction(6))

    def test_degree_and_parity(self):
        for m in range(12):
            poly = sech2_derivative(m)
            assert poly.degree == m
            assert all(c == 0 for i, c in enumerate(poly.coeffs) if (i + m) % 2)

    def test_matches_mpmath_diff(self):
        with mpmath.workdps(30):
            x = mpmath.mpf("0.37")
            for m in range(6):
                numeric = mpmath.diff(lambda y: mpmath.sech(y) ** 2, x, m)
                assert abs(sech2_derivative(m).evaluate(x, mpmath.mp) - numeric) < mpmath.mpf("1e-20")

    @pytest.mark.parametrize("m", range(7))
    def test_matches_mpmath_diff_on_grid(self, m):
        with mpmath.workdps(30):
            for x in mpmath.linspace(-3, 3, 13):
                numeric = mpmath.diff(lambda y: mpmath.sech(y) ** 2, x, m)
                value = sech2_derivative(m).evaluate(x, mpmath.mp)
                assert abs(value - numeric) <= mpmath.mpf("1e-15") * max(1, abs(numeric)), (m, x)

    def test_double_precision_on_grid(self):
        for m in range(7):
            for x in mpmath.linspace(-3, 3, 13):
                with mpmath.workdps(30):
                    numeric = mpmath.diff(lambda y: mpmath.sech(y) ** 2, x, m)
                value = sech2_derivative(m).evaluate(float(x))
                assert value == pytest.approx(float(numeric), rel=1e-10, abs=1e-10), (m, x)

    def test_callable_on_tanh(self):
        poly = sech2_derivative(2)
        assert poly(Fraction(1, 2)) == Fraction(-2) + 6 * Fraction(1, 4)

    def test_sech2_never_overflows(self):
        assert sech2(0) == pytest.approx(1)
        assert sech2(1000) == 0
        assert sech2(-1.3) == pytest.approx(sech2(1.3))

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            sech2_derivative(-1)


class TestSolitonIntegral:

    def test_first_values(self):
        assert grosset_veselov_exact(1) == Fraction(4, 3)
        assert grosset_veselov_exact(2) == Fraction(16, 15)

    def test_reproduces_bernoulli(self):
        for k in range(1, 11):
            assert grosset_veselov_bernoulli(k) == bernoulli(2 * k)
        assert grosset_veselov_bernoulli(6) == Fraction(-691, 2730)

    def test_k_must_be_positive(self):
        with pytest.raises(DomainError):
            grosset_veselov_exact(0)
