"""
Exception hierarchy for the Stieltjes toolkit.
Every failure raised by the numerics and the CLI derives from StieltjesError.
"""

from typing import List, Optional


class StieltjesError(Exception):
    """Base class for all toolkit errors."""


class DomainError(StieltjesError, ValueError):
    """Argument outside the domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested at a pole (zeta at s = 1)."""


class RangeError(StieltjesError, ValueError):
    """Index beyond the supported range of an operation."""


class ConfigurationError(StieltjesError, ValueError):
    """Invalid configuration value or conflicting options."""


class UsageError(StieltjesError):
    """Command-line misuse."""


class FixtureIntegrityError(StieltjesError):
    """Reference fixture failed schema or checksum validation."""


class GammaOverflowError(StieltjesError, OverflowError):
    """Gamma value exceeds the double range. Carries the log-magnitude."""

    def __init__(self, message: str, sign: int, log_value: float):
        super().__init__(message)
        self.sign = sign
        self.log_value = log_value


class ConvergenceError(StieltjesError, ArithmeticError):
    """An iteration or series stopped without meeting its criterion."""

    def __init__(
        self,
        message: str,
        residual: Optional[float] = None,
        partial_sums: Optional[List[float]] = None,
    ):
        super().__init__(message)
        self.residual = residual
        self.partial_sums = partial_sums or []


class AccuracyError(StieltjesError, ArithmeticError):
    """Quadrature error estimate exceeds the requested tolerance."""

    def __init__(self, message: str, value: float, error_estimate: float):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
