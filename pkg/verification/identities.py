"""Exact verification of the Bernoulli / Stirling / Gompertz identities.

Every check here is rational arithmetic end to end: a report passes only
when both sides are the same Fraction. The one exception is
``verify_zeta_even``, whose right-hand side involves pi.
"""

import math
from dataclasses import replace
from fractions import Fraction
from math import comb, factorial
from typing import List

import mpmath

from config import DEFAULT_TOL
from special.exact_numbers import bernoulli, stirling2_explicit, stirling2_row
from special.gompertz import derivative_coeffs
from special.soliton import grosset_veselov_bernoulli
from utils.exceptions import DomainError
from verification.report import SERIES, VerificationReport, exact_report


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def _positive_rational(name: str, value) -> Fraction:
    value = Fraction(value)
    _require(value > 0, f"{name} must be positive, got {value}")
    return value


def euler_series_coeff(n: int) -> Fraction:
    """Coefficient of z^n in 1/(e^z + 1): B_{n+1}(1 - 2^{n+1}) / (n+1)!"""
    _require(n >= 0, f"n must be non-negative, got {n}")
    return bernoulli(n + 1) * (1 - 2 ** (n + 1)) / factorial(n + 1)


def _euler_series_by_inversion(n: int) -> List[Fraction]:
    """Coefficients c_0..c_n of 1/(e^z + 1) by inverting e^z + 1 = 2 + sum z^m/m!"""
    coeffs = [Fraction(1, 2)]
    for i in range(1, n + 1):
        s = sum(Fraction(1, factorial(m)) * coeffs[i - m] for m in range(1, i + 1))
        coeffs.append(-s / 2)
    return coeffs


def verify_euler_series(n: int) -> VerificationReport:
    computed = _euler_series_by_inversion(n)[n]
    return exact_report("euler-series", n, computed, euler_series_coeff(n))


def verify_faulhaber(m: int, n: int) -> VerificationReport:
    """sum_{k<m} k^n against (1/(n+1)) sum_j C(n+1, j) B_j m^{n+1-j}"""
    _require(m >= 2, f"m must be >= 2, got {m}")
    _require(n >= 1, f"n must be >= 1, got {n}")
    expected = sum(k**n for k in range(1, m))
    formula = sum(comb(n + 1, j) * bernoulli(j) * m ** (n + 1 - j) for j in range(n + 1))
    return exact_report("faulhaber", (m, n), Fraction(expected), formula / (n + 1))


def zeta_even_closed_form(n: int, ctx=mpmath.fp):
    """(-1)^{n+1} 2^{2n-1} pi^{2n} B_{2n} / (2n)!"""
    b = bernoulli(2 * n)
    factor = Fraction((-1) ** (n + 1) * 2 ** (2 * n - 1), factorial(2 * n)) * b
    return ctx.mpf(factor.numerator) / factor.denominator * ctx.pi ** (2 * n)


def verify_zeta_even(n: int, terms: int, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Partial sum of k^{-2n} against the Bernoulli closed form.

    Passes when the residual lies in [-tol, tail + tol] where
    tail = terms^{1-2n} / (2n-1) bounds the omitted part of the series. A
    tail wider than tol is reported as a reason but does not fail the check.
    """
    _require(n >= 1, f"n must be >= 1, got {n}")
    _require(terms >= 10, f"terms must be >= 10, got {terms}")
    partial = math.fsum(k ** (-2.0 * n) for k in range(1, terms + 1))
    expected = float(zeta_even_closed_form(n))
    residual = expected - partial
    tail = terms ** (1.0 - 2 * n) / (2 * n - 1)
    reason = None
    if tail > tol:
        reason = f"insufficient terms: tail bound {tail:.3e} exceeds tolerance {tol:.1e}"
    return VerificationReport(
        identity="zeta",
        parameter=(n, terms),
        expected=expected,
        computed=partial,
        abs_error=abs(residual),
        rel_error=abs(residual) / expected,
        passed=-tol <= residual <= tail + tol,
        route=SERIES,
        tolerance=tail + tol,
        reason=reason,
    )


def bernoulli_moment_rhs(n: int) -> Fraction:
    """B_{n+1}(1 - 2^{n+1}) / (n+1)"""
    return bernoulli(n + 1) * (1 - 2 ** (n + 1)) / (n + 1)


def verify_stirling_bernoulli(n: int) -> VerificationReport:
    """sum_k (-1)^k {n brace k} k!/2^{k+1} = B_{n+1}(1 - 2^{n+1})/(n+1)"""
    _require(n >= 1, f"n must be >= 1, got {n}")
    row = stirling2_row(n)
    lhs = sum(Fraction((-1) ** k * row[k] * factorial(k), 2 ** (k + 1)) for k in range(1, n + 1))
    return exact_report("stirling-bernoulli", n, bernoulli_moment_rhs(n), lhs)


def verify_binomial_bernoulli(n: int) -> VerificationReport:
    """Same identity with the Stirling numbers expanded into binomial sums"""
    _require(n >= 1, f"n must be >= 1, got {n}")
    lhs = Fraction(0)
    for k in range(1, n + 1):
        inner = sum((-1) ** j * comb(k, j) * j**n for j in range(k + 1))
        lhs += Fraction(inner, 2 ** (k + 1))
    return exact_report("binomial-bernoulli", n, bernoulli_moment_rhs(n), lhs)


def verify_stirling_explicit(n: int) -> VerificationReport:
    """Recurrence row n against both explicit alternating-sum forms"""
    _require(n >= 0, f"n must be non-negative, got {n}")
    row = stirling2_row(n)
    forward = [stirling2_explicit(n, k, "forward") for k in range(n + 1)]
    reflected = [stirling2_explicit(n, k, "reflected") for k in range(n + 1)]
    report = exact_report("stirling-explicit", n, Fraction(sum(row)), Fraction(sum(forward)))
    agree = list(row) == forward == reflected
    return report if agree else replace(report, passed=False)


def log_moment_exact(n: int, u_max=1) -> Fraction:
    """Integral over (0, u_max) of u log^n(u_max/u) du = n!/2^{n+1} u_max^2"""
    _require(n >= 0, f"n must be non-negative, got {n}")
    u_max = _positive_rational("u_max", u_max)
    return Fraction(factorial(n), 2 ** (n + 1)) * u_max**2


def moment_exact(n: int, u_max=1) -> Fraction:
    """Rational factor of p_n = integral of P_n over (0, u_max); p_n = (-q)^n times this"""
    _require(n >= 0, f"n must be non-negative, got {n}")
    u_max = _positive_rational("u_max", u_max)
    return bernoulli_moment_rhs(n) * u_max**2


def moment_via_log_moments(n: int, u_max=1) -> Fraction:
    """moment_exact rebuilt from the LogPoly coefficients and log moments"""
    _require(n >= 0, f"n must be non-negative, got {n}")
    if n == 0:
        return log_moment_exact(0, u_max)
    # p_n / q^n = sum_k a_k L_k; the (-1)^n moves it onto moment_exact's scale
    total = sum(a * log_moment_exact(k, u_max) for k, a in derivative_coeffs(n).items())
    return (-1) ** n * total


def verify_moment_routes(n: int, u_max=1) -> VerificationReport:
    return exact_report(
        "moment-routes", (n, str(Fraction(u_max))), moment_exact(n, u_max), moment_via_log_moments(n, u_max)
    )


def gumbel_integral_exact(k: int) -> Fraction:
    """Integral over the line of (g^{(k-1)})^2 for the Gumbel pdf g.

    With v = e^{-t} the integrand becomes e^{-2v} (sum_j a_j v^j)^2 / v, and
    each monomial integrates to (i + j - 1)! / 2^{i+j}.
    """
    _require(k >= 1, f"k must be >= 1, got {k}")
    coeffs = list(derivative_coeffs(k).items())
    total = Fraction(0)
    for i, a in coeffs:
        for j, b in coeffs:
            if a and b:
                total += Fraction(a * b * factorial(i + j - 1), 2 ** (i + j))
    return total


def gumbel_rhs(k: int) -> Fraction:
    """(-1)^k B_{2k}(1 - 2^{2k}) / (2k)"""
    return (-1) ** k * bernoulli(2 * k) * (1 - 2 ** (2 * k)) / (2 * k)


def verify_gumbel_bernoulli(k: int) -> VerificationReport:
    _require(k >= 1, f"k must be >= 1, got {k}")
    return exact_report("gumbel", k, gumbel_rhs(k), gumbel_integral_exact(k))


def verify_grosset_veselov(k: int) -> VerificationReport:
    _require(k >= 1, f"k must be >= 1, got {k}")
    return exact_report("soliton", k, bernoulli(2 * k), grosset_veselov_bernoulli(k))
