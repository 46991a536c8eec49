from .exceptions import DomainError, OracleError, QuadratureError, VerificationError
from .validator import (
    validate_derivative_order,
    validate_params,
    validate_range,
    validate_table_request,
    validate_tolerance,
)

__all__ = [
    'DomainError',
    'OracleError',
    'QuadratureError',
    'VerificationError',
    'validate_derivative_order',
    'validate_params',
    'validate_range',
    'validate_table_request',
    'validate_tolerance',
]
