"""
Configuration module for the Stieltjes toolkit.
Centralizes environment defaults; every value can be overridden from the CLI.
"""

import os
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

# Current file is in src/core/, so go up 2 levels to get to project root
PROJECT_ROOT = Path(__file__).parent.parent.parent
ENV_FILE = PROJECT_ROOT / '.env'

load_dotenv(ENV_FILE, override=False)

VALID_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
VALID_FORMATS = ("csv", "json")


class Config:
    """Central configuration class for all settings."""

    # Logging
    LOG_LEVEL: str = os.getenv("STIELTJES_LOG_LEVEL", "WARNING").upper()

    # Oracle precision
    GUARD_DIGITS: int = int(os.getenv("STIELTJES_GUARD_DIGITS", "30"))
    ORACLE_N_MAX: int = int(os.getenv("STIELTJES_ORACLE_N_MAX", "40"))

    # Output
    OUTPUT_FORMAT: str = os.getenv("STIELTJES_FORMAT", "csv").lower()
    DEFAULT_TERMS: int = int(os.getenv("STIELTJES_TERMS", "3"))
    FIXTURES: Optional[str] = os.getenv("STIELTJES_FIXTURES")

    # Row-level parallelism (1 = sequential)
    WORKERS: int = int(os.getenv("STIELTJES_WORKERS", "1"))

    @classmethod
    def problems(cls) -> List[str]:
        """Return a list of human-readable configuration problems."""
        problems = []
        if cls.LOG_LEVEL not in VALID_LOG_LEVELS:
            problems.append(f"STIELTJES_LOG_LEVEL must be one of {', '.join(VALID_LOG_LEVELS)}")
        if cls.GUARD_DIGITS < 10:
            problems.append("STIELTJES_GUARD_DIGITS must be at least 10")
        if cls.ORACLE_N_MAX < 2:
            problems.append("STIELTJES_ORACLE_N_MAX must be at least 2")
        if cls.OUTPUT_FORMAT not in VALID_FORMATS:
            problems.append(f"STIELTJES_FORMAT must be one of {', '.join(VALID_FORMATS)}")
        if cls.DEFAULT_TERMS < 1:
            problems.append("STIELTJES_TERMS must be at least 1")
        if cls.WORKERS < 1:
            problems.append("STIELTJES_WORKERS must be at least 1")
        if cls.FIXTURES and not Path(cls.FIXTURES).exists():
            problems.append(f"STIELTJES_FIXTURES points to a missing file: {cls.FIXTURES}")
        return problems

    @classmethod
    def quadrature_config(cls):
        """Build the default oracle configuration from the environment."""
        from src.numerics.models import QuadratureConfig

        return QuadratureConfig(guard_digits=cls.GUARD_DIGITS, n_max=cls.ORACLE_N_MAX)
