from .settings import (
    BERNOULLI_TABLE_MAX,
    DEFAULT_TOL,
    DERIVATIVE_MAX_N,
    EXTENDED_DPS,
    FLOAT_DIGITS,
    MAX_EVALUATIONS,
    ORACLE_REL_TOL,
    PRECISION_MODES,
    STIRLING_TABLE_MAX,
    VERBOSE,
    precision_context,
    working_precision,
)

__all__ = [
    'BERNOULLI_TABLE_MAX',
    'DEFAULT_TOL',
    'DERIVATIVE_MAX_N',
    'EXTENDED_DPS',
    'FLOAT_DIGITS',
    'MAX_EVALUATIONS',
    'ORACLE_REL_TOL',
    'PRECISION_MODES',
    'STIRLING_TABLE_MAX',
    'VERBOSE',
    'precision_context',
    'working_precision',
]
