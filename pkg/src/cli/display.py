"""
Display utilities for CLI messages.
Everything here goes to stderr; stdout is reserved for data.
"""

import sys


class Display:
    """Handles all message formatting for the CLI."""

    @staticmethod
    def _emit(text: str):
        print(text, file=sys.stderr)

    @staticmethod
    def print_error(message: str):
        """Print an error message."""
        Display._emit(f"[FAIL] {message}")

    @staticmethod
    def print_warning(message: str):
        """Print a warning message."""
        Display._emit(f"[WARN]  {message}")

    @staticmethod
    def print_info(message: str):
        """Print an info message."""
        Display._emit(f"[INFO] {message}")
