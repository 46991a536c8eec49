class DomainError(ValueError):
    """Argument outside the domain of a special-number or Gompertz operation"""


class VerificationError(RuntimeError):
    """Base class for failures of a numerical verification route"""


class QuadratureError(VerificationError):
    """Quadrature did not reach the requested tolerance within its evaluation budget"""

    def __init__(self, message: str, value=None, error_estimate=None, evaluations: int = 0):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.evaluations = evaluations


class OracleError(VerificationError):
    """Finite-difference oracle could not certify its own accuracy"""
