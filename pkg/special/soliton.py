"""Derivatives of the KdV 1-soliton profile sech^2(x) as polynomials in tanh(x).

With tau = tanh x, (tanh)' = sech^2 and (sech^2)' = -2 sech^2 tanh, so

    d^m/dx^m sech^2(x) = sech^2(x) T_m(tanh x),
    T_0 = 1,  T_{m+1}(tau) = (1 - tau^2) T_m'(tau) - 2 tau T_m(tau).

Substituting tau = tanh x turns the squared-derivative integral over the line
into an exact polynomial moment over [-1, 1].
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import mpmath

from utils.exceptions import DomainError

Poly = Tuple[Fraction, ...]


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _poly_derivative(a: Sequence[Fraction]) -> Poly:
    return tuple(i * a[i] for i in range(1, len(a))) or (Fraction(0),)


def _poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    size = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (size - len(a))
    b = list(b) + [Fraction(0)] * (size - len(b))
    return tuple(x + y for x, y in zip(a, b))


def _trim(a: Sequence[Fraction]) -> Poly:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return tuple(a)


@dataclass(frozen=True)
class TanhPoly:
    """T_m(tau) = sum_i coeffs[i] tau^i, so that (sech^2)^(m) = sech^2 T_m(tanh)"""

    order: int
    coeffs: Poly

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, tau):
        acc = 0
        for coeff in reversed(self.coeffs):
            acc = acc * tau + coeff
        return acc

    def evaluate(self, x, ctx=mpmath.fp):
        """sech^2(x) T_m(tanh x) in the given mpmath context"""
        x = ctx.mpf(x)
        tau = ctx.tanh(x)
        acc = ctx.mpf(0)
        for coeff in reversed(self.coeffs):
            acc = acc * tau + ctx.mpf(coeff.numerator) / coeff.denominator
        return sech2(x, ctx) * acc


def sech2(x, ctx=mpmath.fp):
    """sech^2(x) written with e^{-2|x|} so large |x| never overflows"""
    e = ctx.exp(-2 * abs(ctx.mpf(x)))
    return 4 * e / (1 + e) ** 2


_ONE_MINUS_TAU2: Poly = (Fraction(1), Fraction(0), Fraction(-1))
_MINUS_TWO_TAU: Poly = (Fraction(0), Fraction(-2))

_cache: List[Poly] = [(Fraction(1),)]
_lock = threading.Lock()


def sech2_derivative(m: int) -> TanhPoly:
    """T_m for the m-th derivative of sech^2"""
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"derivative order must be a non-negative integer, got {m!r}")
    if m >= len(_cache):
        with _lock:
            while len(_cache) <= m:
                prev = _cache[-1]
                nxt = _poly_add(
                    _poly_mul(_ONE_MINUS_TAU2, _poly_derivative(prev)),
                    _poly_mul(_MINUS_TWO_TAU, prev),
                )
                _cache.append(_trim(nxt))
    return TanhPoly(m, _cache[m])


def _moment(power: int) -> Fraction:
    """Integral of tau^power over [-1, 1]"""
    if power % 2:
        return Fraction(0)
    return Fraction(2, power + 1)


def grosset_veselov_exact(k: int) -> Fraction:
    """Exact integral over the line of ((d/dx)^{k-1} sech^2 x)^2.

    Equal to the integral over [-1, 1] of (1 - tau^2) T_{k-1}(tau)^2.
    """
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    tanh_poly = sech2_derivative(k - 1).coeffs
    integrand = _poly_mul(_ONE_MINUS_TAU2, _poly_mul(tanh_poly, tanh_poly))
    return sum((c * _moment(i) for i, c in enumerate(integrand) if c), Fraction(0))


def grosset_veselov_bernoulli(k: int) -> Fraction:
    """(-1)^{k-1} / 2^{2k+1} times the soliton integral; equals B_{2k}"""
    return Fraction((-1) ** (k - 1), 2 ** (2 * k + 1)) * grosset_veselov_exact(k)
