from typing import Optional, Tuple

from config import BERNOULLI_TABLE_MAX, DERIVATIVE_MAX_N, STIRLING_TABLE_MAX

TABLE_LIMITS = {
    "bernoulli": (0, BERNOULLI_TABLE_MAX),
    "stirling": (0, STIRLING_TABLE_MAX),
    "gv": (1, 60),
}

Check = Tuple[bool, Optional[str]]


def validate_range(name: str, lower: int, upper: int, minimum: int, maximum: Optional[int]) -> Check:
    """Validates an inclusive parameter range
    Returns : (ok, message) with message None when ok
    """
    if upper < lower:
        return False, f"empty range for {name}: {lower}..{upper}"
    if lower < minimum:
        return False, f"{name} must be >= {minimum}, got {lower}"
    if maximum is not None and upper > maximum:
        return False, f"{name} must be <= {maximum}, got {upper}"
    return True, None


def validate_table_request(kind: str, lower: int, upper: int) -> Check:
    if kind not in TABLE_LIMITS:
        return False, f"unknown table {kind!r}, expected one of {sorted(TABLE_LIMITS)}"
    minimum, maximum = TABLE_LIMITS[kind]
    return validate_range("n" if kind != "gv" else "k", lower, upper, minimum, maximum)


def validate_params(q: float, c: float, u_max: float) -> Check:
    """Gompertz parameters must all be positive and finite"""
    for name, value in (("q", q), ("c", c), ("umax", u_max)):
        if not (value > 0 and value != float("inf")):
            return False, f"--{name} must be a positive finite number, got {value}"
    return True, None


def validate_derivative_order(n: int) -> Check:
    return validate_range("n", n, n, 0, DERIVATIVE_MAX_N)


def validate_tolerance(tol: float) -> Check:
    if not tol > 0:
        return False, f"--tol must be positive, got {tol}"
    return True, None
