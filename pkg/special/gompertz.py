"""The Gompertz function u(t) = u_max exp(-c exp(-q t)) and its derivatives.

Every derivative has the closed form

    u^(n)(t) = q^n sum_{k=1..n} (-1)^(n-k) {n brace k} u log^k(u_max / u)

whose integer coefficients live in ``LogPoly``.  Along a solution
log(u_max / u(t)) = c exp(-q t), which turns the same coefficients into the
exponential sum ``ExpSum`` used as the primary evaluation route.

Numeric functions take an mpmath context: ``mpmath.fp`` (double, default)
or ``mpmath.mp`` (extended; the caller controls the digit count).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Tuple

import mpmath

from config import EXTENDED_DPS, ORACLE_REL_TOL
from special.exact_numbers import stirling2_row
from utils.exceptions import DomainError, OracleError

ORACLE_MAX_ORDER = 12
ORACLE_GUARD_DPS = 10


def _real(ctx, x):
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / x.denominator
    return ctx.mpf(x)


@dataclass(frozen=True)
class GompertzParams:
    """Rate q, shape c = log(u_max / u(0)) and saturation level u_max"""

    q: float = 1.0
    c: float = 1.0
    u_max: float = 1.0

    def __post_init__(self):
        for name in ("q", "c", "u_max"):
            value = getattr(self, name)
            if not value > 0:
                raise DomainError(f"{name} must be positive, got {value!r}")

    @classmethod
    def unit(cls) -> "GompertzParams":
        """q = c = u_max = 1: the Gumbel cdf"""
        return cls(1, 1, 1)

    def initial_value(self, ctx=mpmath.fp):
        """u(0) = u_max e^{-c}"""
        return _real(ctx, self.u_max) * ctx.exp(-_real(ctx, self.c))


@dataclass(frozen=True)
class LogPoly:
    """Coefficients a_k = (-1)^(n-k) {n brace k}, k = 1..n, of the nth derivative"""

    degree: int
    coeffs: Tuple[int, ...]

    def coefficient(self, k: int) -> int:
        if k < 1 or k > self.degree:
            return 0
        return self.coeffs[k - 1]

    def items(self):
        return zip(range(1, self.degree + 1), self.coeffs)


@dataclass(frozen=True)
class ExpSum:
    """u^(n)(t) = q^n u_max e^{-v} sum_j a_j v^j with v = c e^{-q t}"""

    degree: int
    terms: Tuple[Tuple[int, int], ...]

    def evaluate(self, params: GompertzParams, t, ctx=mpmath.fp):
        q, c, u_max = (_real(ctx, x) for x in (params.q, params.c, params.u_max))
        log_v = ctx.log(c) - q * _real(ctx, t)
        if ctx is mpmath.fp and log_v > 700:
            return ctx.mpf(0)
        v = ctx.exp(log_v)
        total = ctx.mpf(0)
        # each term as a_j exp(j log v - v) so neither tail overflows
        for j, a in self.terms:
            total += a * ctx.exp(j * log_v - v)
        return q**self.degree * u_max * total


def _check_order(n: int, minimum: int = 0) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < minimum:
        raise DomainError(f"derivative order must be an integer >= {minimum}, got {n!r}")


@lru_cache(maxsize=None)
def derivative_coeffs(n: int) -> LogPoly:
    """LogPoly of the nth derivative (n >= 1)"""
    _check_order(n, 1)
    row = stirling2_row(n)
    coeffs = tuple((-1) ** (n - k) * row[k] for k in range(1, n + 1))
    return LogPoly(n, coeffs)


@lru_cache(maxsize=None)
def exp_sum(n: int) -> ExpSum:
    poly = derivative_coeffs(n)
    return ExpSum(n, tuple((j, a) for j, a in poly.items() if a != 0))


def gompertz_eval(params: GompertzParams, t, ctx=mpmath.fp):
    """u(t) = u_max exp(-c exp(-q t))"""
    q, c, u_max = (_real(ctx, x) for x in (params.q, params.c, params.u_max))
    exponent = ctx.log(c) - q * _real(ctx, t)
    if ctx is mpmath.fp and exponent > 700:
        # e^{-v} underflows long before v overflows
        return ctx.mpf(0)
    return u_max * ctx.exp(-ctx.exp(exponent))


def gompertz_inverse_time(params: GompertzParams, u, ctx=mpmath.fp):
    """The time t at which u(t) = u, for 0 < u < u_max"""
    u = _real(ctx, u)
    q, c, u_max = (_real(ctx, x) for x in (params.q, params.c, params.u_max))
    if not 0 < u < u_max:
        raise DomainError(f"u must lie in (0, u_max), got {u}")
    return -ctx.log(ctx.log(u_max / u) / c) / q


def derivative_eval(n: int, params: GompertzParams, t, ctx=mpmath.fp):
    """u^(n)(t) through the exponential-sum form; n = 0 gives u(t)"""
    _check_order(n)
    if n == 0:
        return gompertz_eval(params, t, ctx)
    return exp_sum(n).evaluate(params, t, ctx)


def log_poly_eval(poly: LogPoly, params: GompertzParams, u, ctx=mpmath.fp):
    """q^n sum_k a_k u log^k(u_max / u), the second evaluation route"""
    u = _real(ctx, u)
    q, u_max = _real(ctx, params.q), _real(ctx, params.u_max)
    log_ratio = ctx.log(u_max / u)
    acc = ctx.mpf(0)
    for k in range(poly.degree, 0, -1):
        acc = acc * log_ratio + poly.coefficient(k)
    return q**poly.degree * u * acc * log_ratio


def bell_form_eval(n: int, params: GompertzParams, u, ctx=mpmath.fp):
    """(-q)^n u B_n(log(u / u_max)) with B_n the Bell polynomial"""
    _check_order(n)
    u = _real(ctx, u)
    q, u_max = _real(ctx, params.q), _real(ctx, params.u_max)
    if n == 0:
        return u
    x = ctx.log(u / u_max)
    row = stirling2_row(n)
    acc = ctx.mpf(0)
    for k in range(n, 0, -1):
        acc = acc * x + row[k]
    return (-q) ** n * u * acc * x


def gumbel_pdf_derivative(k: int, t, ctx=mpmath.fp):
    """d^{k-1}/dt^{k-1} of g(t) = exp(-e^{-t}) e^{-t}"""
    _check_order(k, 1)
    return derivative_eval(k, GompertzParams.unit(), t, ctx)


def gumbel_pdf(t, ctx=mpmath.fp):
    return gumbel_pdf_derivative(1, t, ctx)


def fisher_tippett_cdf(t, q=1.0, c=1.0, ctx=mpmath.fp):
    """The Gompertz function with saturation level 1"""
    return gompertz_eval(GompertzParams(q, c, 1), t, ctx)


def egf_eval(u, z, params: GompertzParams, ctx=mpmath.fp):
    """Closed-form e.g.f. G(u, z) = u_max (u / u_max)^{exp(-q z)}"""
    u = _real(ctx, u)
    q, u_max = _real(ctx, params.q), _real(ctx, params.u_max)
    if not 0 < u < u_max:
        raise DomainError(f"e.g.f. needs 0 < u < u_max, got u={u}")
    return u_max * (u / u_max) ** ctx.exp(-q * _real(ctx, z))


@lru_cache(maxsize=None)
def _central_weights(n: int) -> Tuple[Fraction, ...]:
    """Exact weights w_j, j = -n..n, with sum_j w_j p(j) = p^(n)(0) for deg p <= 2n"""
    nodes = range(-n, n + 1)
    weights = []
    for j in nodes:
        # coefficients of the Lagrange basis polynomial L_j
        poly = [Fraction(1)]
        for i in nodes:
            if i == j:
                continue
            scale = Fraction(1, j - i)
            shifted = [Fraction(0)] * (len(poly) + 1)
            for p, coeff in enumerate(poly):
                shifted[p + 1] += coeff * scale
                shifted[p] -= coeff * i * scale
            poly = shifted
        weights.append(poly[n] * factorial(n))
    return tuple(weights)


def _stencil_derivative(params, t, n, h, ctx):
    weights = _central_weights(n)
    total = ctx.mpf(0)
    for j, w in zip(range(-n, n + 1), weights):
        if w:
            total += _real(ctx, w) * gompertz_eval(params, t + j * h, ctx)
    return total / h**n


def taylor_coeff_oracle(params: GompertzParams, t, n: int):
    """n! [z^n] of z -> u(t + z), extracted numerically from a 2n+1 point stencil.

    The step is 10^{-28/(n+1)} on the natural time scale 1/(q max(1, c e^{-qt}));
    the result is the half-step value and the step-halving difference is its
    error estimate. Raises OracleError above ORACLE_REL_TOL relative to
    max(|value|, u_max q^n).

    The stencil sum cancels about n log10(2/h) digits, so the oracle always
    runs in ``mpmath.mp`` with that many digits on top of the caller's
    precision (at least EXTENDED_DPS).
    """
    _check_order(n)
    if n > ORACLE_MAX_ORDER:
        raise DomainError(f"oracle order is limited to {ORACLE_MAX_ORDER}, got {n}")
    ctx = mpmath.mp
    with ctx.workdps(max(ctx.dps, EXTENDED_DPS)):
        t = _real(ctx, t)
        if n == 0:
            return gompertz_eval(params, t, ctx)
        q, c, u_max = (_real(ctx, x) for x in (params.q, params.c, params.u_max))
        v = c * ctx.exp(-q * t)
        h = ctx.mpf(10) ** (ctx.mpf(-28) / (n + 1)) / (q * max(ctx.mpf(1), v))
        extra = int(ctx.ceil(n * ctx.log10(2 / h))) + 2 * n + ORACLE_GUARD_DPS
        with ctx.extradps(max(extra, 0)):
            coarse = _stencil_derivative(params, t, n, h, ctx)
            fine = _stencil_derivative(params, t, n, h / 2, ctx)
            scale = max(abs(fine), u_max * q**n)
            if abs(fine - coarse) > ORACLE_REL_TOL * scale:
                raise OracleError(
                    f"taylor oracle for n={n} at t={t}: step-halving difference "
                    f"{mpmath.nstr(abs(fine - coarse), 3)} exceeds {ORACLE_REL_TOL} relative"
                )
        return +fine
