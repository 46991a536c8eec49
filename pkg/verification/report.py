from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

import mpmath

Number = Union[Fraction, float, Any]

EXACT = "exact"
QUADRATURE = "quadrature"
SERIES = "series"


def _as_real(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return x


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one identity at one parameter value"""

    identity: str
    parameter: Any
    expected: Number
    computed: Number
    abs_error: Number
    rel_error: Number
    passed: bool
    route: str = EXACT
    tolerance: Number = 0
    reason: Optional[str] = None


def exact_report(identity: str, parameter, expected: Fraction, computed: Fraction) -> VerificationReport:
    """Zero-tolerance comparison of two exact rationals"""
    diff = abs(Fraction(computed) - Fraction(expected))
    rel = diff / abs(expected) if expected != 0 else diff
    return VerificationReport(
        identity=identity,
        parameter=parameter,
        expected=Fraction(expected),
        computed=Fraction(computed),
        abs_error=diff,
        rel_error=rel,
        passed=diff == 0,
        route=EXACT,
    )


def tolerance_report(identity: str, parameter, expected, computed, tolerance, route: str = QUADRATURE) -> VerificationReport:
    """Floating comparison: passed iff |computed - expected| <= tolerance"""
    reference = _as_real(expected)
    diff = abs(computed - reference)
    rel = diff / abs(reference) if reference != 0 else diff
    return VerificationReport(
        identity=identity,
        parameter=parameter,
        expected=expected,
        computed=computed,
        abs_error=diff,
        rel_error=rel,
        passed=bool(diff <= tolerance),
        route=route,
        tolerance=tolerance,
    )


def failed_report(identity: str, parameter, expected, reason: str, route: str = QUADRATURE) -> VerificationReport:
    """A route that produced no trustworthy value"""
    return VerificationReport(
        identity=identity,
        parameter=parameter,
        expected=expected,
        computed=None,
        abs_error=None,
        rel_error=None,
        passed=False,
        route=route,
        reason=reason,
    )


@dataclass
class RunManifest:
    """Everything one CLI invocation emits"""

    command: str
    parameters: Dict[str, Any]
    timestamp: str
    precision_mode: str
    results: List[Any] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(getattr(r, "passed", True) for r in self.results)
