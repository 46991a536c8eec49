"""Floating-point verification of the integral identities.

The integrator is a double-exponential trapezoidal rule: the integration
domain is mapped onto the whole s-line by

    real line    x = sinh(pi/2 sinh s)
    half line    x = exp(pi/2 sinh s)
    interval     x = mid + half tanh(pi/2 sinh s)

and the step is halved until two consecutive levels agree. Each level only
evaluates the new odd nodes, so the work per level doubles at most.

The Gumbel / Gompertz integrands are pulled back to v = c e^{-qt} on the half
line, where they are e^{-2v} times a polynomial over v and decay cleanly on
both sides.
"""

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Tuple

import mpmath

from config import DEFAULT_TOL, MAX_EVALUATIONS, precision_context, working_precision
from special.gompertz import GompertzParams, derivative_eval, egf_eval, gompertz_inverse_time, gumbel_pdf_derivative
from special.soliton import grosset_veselov_exact, sech2_derivative
from utils import console
from utils.exceptions import DomainError, QuadratureError
from verification.identities import gumbel_rhs, log_moment_exact, moment_exact
from verification.report import QUADRATURE, VerificationReport, failed_report, tolerance_report

MIN_LEVELS = 3
# extended precision is required for the Gumbel integrand above this k
DOUBLE_PRECISION_MAX_K = 6


@dataclass(frozen=True)
class QuadratureResult:
    value: object
    error_estimate: object
    evaluations: int


def _machine_eps(ctx):
    if ctx is mpmath.fp:
        return 2.0**-52
    return ctx.eps


def _to_ctx(ctx, x):
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / x.denominator
    return ctx.mpf(x)


def _real_line_node(ctx):
    half_pi = ctx.pi / 2

    def node(s):
        inner = half_pi * ctx.sinh(s)
        return ctx.sinh(inner), half_pi * ctx.cosh(s) * ctx.cosh(inner)

    return node


def _half_line_node(ctx):
    half_pi = ctx.pi / 2

    def node(s):
        x = ctx.exp(half_pi * ctx.sinh(s))
        return x, half_pi * ctx.cosh(s) * x

    return node


def _interval_node(ctx, a, b):
    half_pi = ctx.pi / 2
    half = (b - a) / 2

    def node(s):
        y = half_pi * ctx.sinh(s)
        # distance to the nearer endpoint, without cancellation near it
        gap = 2 * half / (1 + ctx.exp(2 * abs(y)))
        x = b - gap if y >= 0 else a + gap
        return x, half * half_pi * ctx.cosh(s) / ctx.cosh(y) ** 2

    return node


def _double_exponential(
    f: Callable,
    node: Callable,
    tol,
    ctx,
    s_max: float,
    budget: int = MAX_EVALUATIONS,
) -> QuadratureResult:
    eps = _machine_eps(ctx)
    tol = ctx.mpf(tol)
    state = {"evaluations": 0, "peak": ctx.mpf(0), "sum": ctx.mpf(0), "abs_sum": ctx.mpf(0)}

    def add_term(s):
        x, w = node(ctx.mpf(s))
        term = w * f(x)
        state["evaluations"] += 1
        if not math.isfinite(float(term)):
            raise QuadratureError(
                f"integrand is not finite at x={mpmath.nstr(x, 8)}",
                evaluations=state["evaluations"],
            )
        state["sum"] += term
        state["abs_sum"] += abs(term)
        if abs(term) > state["peak"]:
            state["peak"] = abs(term)
        return abs(term)

    def threshold():
        return max(eps * state["peak"], tol * ctx.mpf(10) ** -6)

    def walk(h, first: int, stride: int) -> None:
        for direction in (1, -1):
            small_run = 0
            j = first
            while True:
                s = direction * j * h
                if abs(s) > s_max:
                    break
                magnitude = add_term(s)
                if state["evaluations"] > budget:
                    raise QuadratureError(
                        f"evaluation budget of {budget} exhausted",
                        value=h * state["sum"],
                        evaluations=state["evaluations"],
                    )
                small_run = small_run + 1 if abs(s) > 1 and magnitude <= threshold() else 0
                if small_run >= 3:
                    break
                j += stride

    h = ctx.mpf(1)
    add_term(0)
    walk(h, 1, 1)
    previous = h * state["sum"]
    level = 0
    while True:
        level += 1
        h /= 2
        walk(h, 1, 2)
        value = h * state["sum"]
        error = abs(value - previous) + 10 * eps * h * state["abs_sum"] + 6 * h * threshold()
        if level >= MIN_LEVELS and error <= tol:
            return QuadratureResult(value, error, state["evaluations"])
        previous = value


def integrate_real_line(f: Callable, tol=DEFAULT_TOL, ctx=mpmath.fp) -> QuadratureResult:
    """Integral of f over the whole line; f must decay faster than any power"""
    return _double_exponential(f, _real_line_node(ctx), tol, ctx, s_max=6.0)


def integrate_half_line(f: Callable, tol=DEFAULT_TOL, ctx=mpmath.fp) -> QuadratureResult:
    """Integral of f over (0, infinity)"""
    return _double_exponential(f, _half_line_node(ctx), tol, ctx, s_max=6.0)


def integrate_interval(f: Callable, a, b, tol=DEFAULT_TOL, ctx=mpmath.fp) -> QuadratureResult:
    """Integral of f over (a, b); endpoint values are never requested"""
    a, b = ctx.mpf(a), ctx.mpf(b)
    return _double_exponential(f, _interval_node(ctx, a, b), tol, ctx, s_max=4.0)


def _quadrature_report(identity, parameter, expected, integrate, tol, ctx) -> VerificationReport:
    """Run one quadrature and compare with the exact value"""
    try:
        result = integrate()
    except QuadratureError as e:
        console.warning(f"{identity} {parameter}: {e}")
        return failed_report(identity, parameter, expected, str(e))
    report = tolerance_report(identity, parameter, expected, result.value, tol, route=QUADRATURE)
    console.progress(
        f"{identity} {parameter}: {mpmath.nstr(result.value, 15)} "
        f"({result.evaluations} evaluations, error estimate {mpmath.nstr(result.error_estimate, 3)})"
    )
    if not report.passed and report.abs_error > 10 * tol:
        return _with_reason(report, "quadrature disagrees with the exact value by more than 10x tolerance")
    return report


def _with_reason(report: VerificationReport, reason: str) -> VerificationReport:
    return replace(report, passed=False, reason=reason)


def _check_precision(precision: str, k: int) -> None:
    if precision == "double" and k > DOUBLE_PRECISION_MAX_K:
        raise DomainError(f"k={k} needs extended precision (double is limited to k <= {DOUBLE_PRECISION_MAX_K})")


def _pullback(params: GompertzParams, ctx) -> Tuple[Callable, Callable]:
    """t(v) for v = c e^{-qt} and the Jacobian |dt/dv| = 1/(q v)"""
    q, c = _to_ctx(ctx, params.q), _to_ctx(ctx, params.c)
    log_c = ctx.log(c)

    def time(v):
        return (log_c - ctx.log(v)) / q

    def jacobian(v):
        return 1 / (q * v)

    return time, jacobian


def gumbel_integrand(k: int, ctx=mpmath.fp) -> Callable:
    """(g^(k-1)(t))^2 pulled back to v = e^{-t} on the half line"""

    def integrand(v):
        return gumbel_pdf_derivative(k, -ctx.log(v), ctx) ** 2 / v

    return integrand


def soliton_integrand(k: int, ctx=mpmath.fp) -> Callable:
    """((sech^2)^(k-1)(x))^2 on the real line"""
    profile = sech2_derivative(k - 1)

    def integrand(x):
        return profile.evaluate(x, ctx) ** 2

    return integrand


def verify_gumbel_bernoulli_quadrature(k: int, tol=DEFAULT_TOL, precision: str = "extended") -> VerificationReport:
    """Quadrature of the squared (k-1)th derivative of the Gumbel pdf"""
    if not 1 <= k <= 10:
        raise DomainError(f"k must lie in 1..10, got {k}")
    _check_precision(precision, k)
    ctx = precision_context(precision)
    with working_precision(ctx):
        integrand = gumbel_integrand(k, ctx)
        return _quadrature_report(
            "gumbel-quad", k, gumbel_rhs(k), lambda: integrate_half_line(integrand, tol, ctx), tol, ctx
        )


def boundary_decay(k: int, params: GompertzParams, at: float = 40.0, ctx=mpmath.fp):
    """Largest by-parts boundary term |u^(i) u^(j)|, i + j = 2k - 1, at t = +-at"""
    worst = ctx.mpf(0)
    for t in (at, -at):
        for i in range(1, 2 * k - 1):
            j = 2 * k - 1 - i
            product = derivative_eval(i, params, t, ctx) * derivative_eval(j, params, t, ctx)
            worst = max(worst, abs(product))
    return worst


def verify_general_derivative_integral(
    k: int, params: GompertzParams, tol=DEFAULT_TOL, precision: str = "extended"
) -> VerificationReport:
    """Quadrature of (u^(k))^2 over the line against (-1)^k q^{2k-1} B_{2k}(1-2^{2k})/(2k) u_max^2"""
    if not 1 <= k <= 8:
        raise DomainError(f"k must lie in 1..8, got {k}")
    ctx = precision_context(precision)
    parameter = (k, params.q, params.c, params.u_max)
    with working_precision(ctx):
        q, u_max = _to_ctx(ctx, params.q), _to_ctx(ctx, params.u_max)
        expected = _to_ctx(ctx, gumbel_rhs(k)) * q ** (2 * k - 1) * u_max**2
        time, jacobian = _pullback(params, ctx)

        def integrand(v):
            return derivative_eval(k, params, time(v), ctx) ** 2 * jacobian(v)

        report = _quadrature_report(
            "general-derivative", parameter, expected, lambda: integrate_half_line(integrand, tol, ctx), tol, ctx
        )
        if k > 1 and report.passed:
            residue = boundary_decay(k, params, ctx=ctx)
            if residue > tol:
                return _with_reason(report, f"boundary terms do not vanish: {mpmath.nstr(residue, 3)} at |t| = 40")
        return report


def moment_by_substitution(n: int, params: GompertzParams, tol=DEFAULT_TOL, ctx=mpmath.fp) -> QuadratureResult:
    """Integral of u^(n)(t(u)) over (0, u_max), with t(u) the inverse of the Gompertz function"""
    u_max = _to_ctx(ctx, params.u_max)
    # u^(n) tends to u_max (n = 0) or 0 as u -> u_max
    top = u_max if n == 0 else ctx.mpf(0)

    def integrand(u):
        if u <= 0:
            return ctx.mpf(0)
        if u >= u_max:
            return top
        return derivative_eval(n, params, gompertz_inverse_time(params, u, ctx), ctx)

    return integrate_interval(integrand, 0, u_max, tol, ctx)


def verify_moment_quadrature(
    n: int, params: GompertzParams, tol=DEFAULT_TOL, precision: str = "extended"
) -> VerificationReport:
    """Quadrature of u^(n) u' over the line against (-q)^n moment_exact(n, u_max).

    A passing report is cross-checked by the same integral taken in u.
    """
    if not 0 <= n <= 10:
        raise DomainError(f"n must lie in 0..10, got {n}")
    ctx = precision_context(precision)
    parameter = (n, params.q, params.c, params.u_max)
    with working_precision(ctx):
        q = _to_ctx(ctx, params.q)
        expected = (-q) ** n * _to_ctx(ctx, moment_exact(n, Fraction(params.u_max)))
        time, jacobian = _pullback(params, ctx)

        def integrand(v):
            t = time(v)
            return derivative_eval(n, params, t, ctx) * derivative_eval(1, params, t, ctx) * jacobian(v)

        report = _quadrature_report(
            "moment", parameter, expected, lambda: integrate_half_line(integrand, tol, ctx), tol, ctx
        )
        if not report.passed:
            return report
        try:
            along_u = moment_by_substitution(n, params, tol, ctx)
        except QuadratureError as e:
            return _with_reason(report, f"u-substitution quadrature failed: {e}")
        if abs(along_u.value - expected) > tol:
            return _with_reason(report, f"u-substitution gives {mpmath.nstr(along_u.value, 15)}")
        return report


def verify_grosset_veselov_quadrature(k: int, tol=DEFAULT_TOL, precision: str = "extended") -> VerificationReport:
    """Quadrature of ((sech^2)^(k-1))^2 over the line"""
    if not 1 <= k <= 8:
        raise DomainError(f"k must lie in 1..8, got {k}")
    ctx = precision_context(precision)
    with working_precision(ctx):
        integrand = soliton_integrand(k, ctx)
        return _quadrature_report(
            "soliton-quad", k, grosset_veselov_exact(k), lambda: integrate_real_line(integrand, tol, ctx), tol, ctx
        )


def verify_log_moment_quadrature(n: int, u_max=1, tol=DEFAULT_TOL, precision: str = "extended") -> VerificationReport:
    """Direct quadrature of u log^n(u_max/u) over (0, u_max)"""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    expected = log_moment_exact(n, u_max)
    ctx = precision_context(precision)
    with working_precision(ctx):
        top = _to_ctx(ctx, Fraction(u_max))

        def integrand(u):
            if u <= 0:
                return ctx.mpf(0)
            return u * ctx.log(top / u) ** n

        return _quadrature_report(
            "log-moment",
            (n, str(Fraction(u_max))),
            expected,
            lambda: integrate_interval(integrand, 0, top, tol, ctx),
            tol,
            ctx,
        )


def egf_moment_series(z, params: GompertzParams, terms: int = 60, ctx=mpmath.fp):
    """Truncated sum_n p_n z^n / n! with p_n = (-q)^n moment_exact(n, u_max)"""
    q, z = _to_ctx(ctx, params.q), _to_ctx(ctx, z)
    u_max = Fraction(params.u_max)
    total = ctx.mpf(0)
    for n in range(terms + 1):
        total += _to_ctx(ctx, moment_exact(n, u_max)) * (-q * z) ** n / math.factorial(n)
    return total


def verify_egf_moment(z, params: GompertzParams, tol=DEFAULT_TOL, precision: str = "extended") -> VerificationReport:
    """Integral of G(u, z) over (0, u_max) against u_max^2 / (e^{-qz} + 1).

    For |q z| < pi/2 the closed form is also compared with the series built from
    the exact moments.
    """
    ctx = precision_context(precision)
    parameter = (z, params.q, params.c, params.u_max)
    with working_precision(ctx):
        q, u_max, zz = (_to_ctx(ctx, x) for x in (params.q, params.u_max, z))
        expected = u_max**2 / (ctx.exp(-q * zz) + 1)

        def integrand(u):
            if u <= 0:
                return ctx.mpf(0)
            if u >= u_max:
                return u_max
            return egf_eval(u, zz, params, ctx)

        report = _quadrature_report(
            "egf-moment", parameter, expected, lambda: integrate_interval(integrand, 0, u_max, tol, ctx), tol, ctx
        )
        if report.passed and abs(q * zz) < ctx.pi / 2:
            series = egf_moment_series(zz, params, ctx=ctx)
            if abs(series - expected) > tol:
                return _with_reason(report, f"moment series {mpmath.nstr(series, 15)} disagrees with closed form")
        return report
