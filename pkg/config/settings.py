import os
from contextlib import nullcontext

import mpmath
from dotenv import load_dotenv

load_dotenv()


def _env_float(name: str, default: float) -> float:
    value = os.getenv(name)
    return float(value) if value not in (None, "") else default


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    return int(value) if value not in (None, "") else default


# Verification defaults
DEFAULT_TOL = _env_float("GOMPERTZ_DEFAULT_TOL", 1e-10)
ORACLE_REL_TOL = _env_float("GOMPERTZ_ORACLE_REL_TOL", 1e-6)
MAX_EVALUATIONS = _env_int("GOMPERTZ_MAX_EVALUATIONS", 2**20)

# Precision
EXTENDED_DPS = _env_int("GOMPERTZ_EXTENDED_DPS", 40)
FLOAT_DIGITS = _env_int("GOMPERTZ_FLOAT_DIGITS", 25)

# CLI range limits
BERNOULLI_TABLE_MAX = _env_int("GOMPERTZ_BERNOULLI_TABLE_MAX", 1000)
STIRLING_TABLE_MAX = _env_int("GOMPERTZ_STIRLING_TABLE_MAX", 200)
DERIVATIVE_MAX_N = _env_int("GOMPERTZ_DERIVATIVE_MAX_N", 30)

VERBOSE = os.getenv("GOMPERTZ_VERBOSE", "").lower() in ("1", "true", "yes")

PRECISION_MODES = ("double", "extended")


def precision_context(mode: str = "extended"):
    """Arithmetic context for a precision mode: mpmath.fp or mpmath.mp"""
    if mode == "double":
        return mpmath.fp
    if mode == "extended":
        return mpmath.mp
    raise ValueError(f"unknown precision mode {mode!r}, expected one of {PRECISION_MODES}")


def working_precision(ctx):
    """Context manager pinning the digit count used by an extended-precision run"""
    if ctx is mpmath.fp:
        return nullcontext()
    return ctx.workdps(EXTENDED_DPS)
