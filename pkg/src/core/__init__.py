"""
Core modules for configuration and error types.
"""

from src.core.config import Config
from src.core.errors import (
    AccuracyError,
    ConfigurationError,
    ConvergenceError,
    DomainError,
    FixtureIntegrityError,
    GammaOverflowError,
    PoleError,
    RangeError,
    StieltjesError,
    UsageError,
)

__all__ = [
    'Config',
    'StieltjesError',
    'DomainError',
    'PoleError',
    'RangeError',
    'ConfigurationError',
    'UsageError',
    'FixtureIntegrityError',
    'GammaOverflowError',
    'ConvergenceError',
    'AccuracyError',
]
