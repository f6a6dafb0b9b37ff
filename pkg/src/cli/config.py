"""
Configuration management for the CLI.
"""

import logging
import sys
from typing import Any, Dict, Optional

from src.core.config import Config, VALID_FORMATS
from src.numerics.models import QuadratureConfig

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


class CLIConfig:
    """Manages CLI configuration and environment settings."""

    def setup_environment(self, debug: bool = False):
        """Route logging to stderr so standard output carries data only."""
        level = logging.DEBUG if debug else getattr(logging, Config.LOG_LEVEL, logging.WARNING)
        logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)

    def validate_configuration(self, config: Dict[str, Any]) -> tuple[bool, Optional[str]]:
        """Validate configuration dictionary."""
        problems = Config.problems()
        if problems:
            return False, problems[0]

        if not config.get("command"):
            return False, "A subcommand is required"

        if config.get("format") not in VALID_FORMATS:
            return False, f"Unknown output format: {config.get('format')}"

        output = config.get("output")
        if output is not None and not output.parent.exists():
            return False, f"Output directory not found: {output.parent}"

        fixtures = config.get("fixtures")
        if fixtures is not None and not fixtures.exists():
            return False, f"Fixture file not found: {fixtures}"

        return True, None

    @staticmethod
    def quadrature_config() -> QuadratureConfig:
        return Config.quadrature_config()

