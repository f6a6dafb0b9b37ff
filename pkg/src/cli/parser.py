"""
Command-line argument parser for the Stieltjes toolkit.
"""

import argparse
from pathlib import Path
from typing import Any, Dict, Optional

from src.core.config import Config, VALID_FORMATS
from src.core.errors import UsageError
from src.numerics.asymptotics import FORMS, KC_DEFAULT_PATH, KC_PATHS

METHODS = ("one-term", "m-term", "leading", "kc", "oracle", "reference")
INTEGER_METHODS = ("m-term", "leading", "oracle", "reference")

SCAN_CENTER = 137.0
SCAN_HALF_WIDTH = 0.02
SCAN_STEP = 0.001


class _RaisingParser(argparse.ArgumentParser):
    """argparse parser that raises UsageError instead of exiting with status 2."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


class ArgumentParser:
    """Handles command-line argument parsing."""

    @staticmethod
    def create_parser() -> argparse.ArgumentParser:
        """Create and configure the argument parser."""
        common = _RaisingParser(add_help=False)
        common.add_argument(
            "--format",
            choices=VALID_FORMATS,
            default=Config.OUTPUT_FORMAT,
            help="Output format (default: csv)"
        )
        common.add_argument(
            "--output",
            type=str,
            help="Write to this file instead of standard output"
        )
        common.add_argument(
            "--paper-format",
            action="store_true",
            help="Fixed notation below 10^7 and m.mmmmmm.10^{e} above, as printed in the published tables"
        )
        common.add_argument(
            "--terms",
            type=int,
            default=Config.DEFAULT_TERMS,
            help="Number of saddle-point terms M for the m-term method (default: 3)"
        )
        common.add_argument(
            "--shared-saddle",
            action="store_true",
            help="Use the saddle point of n for every term instead of n + k"
        )
        common.add_argument(
            "--form",
            choices=FORMS,
            default="listing",
            help="Algebraic form of the saddle-point terms"
        )
        common.add_argument(
            "--fixtures",
            type=str,
            default=Config.FIXTURES,
            help="Optional file of high-precision reference values ('n,gamma' per line)"
        )
        common.add_argument(
            "--workers",
            type=int,
            default=Config.WORKERS,
            help="Worker processes for row computations (default: 1)"
        )
        common.add_argument(
            "--timings",
            action="store_true",
            help="Add a runtime_ms column"
        )
        common.add_argument(
            "--debug",
            action="store_true",
            help="Show debug output and full stack traces"
        )

        parser = _RaisingParser(
            description="Stieltjes constants - integral oracle and saddle-point asymptotics",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            epilog="""
EXAMPLES:
  # Three-term saddle-point value at the ill-conditioned index:
  python run.py compute --n 137 --method m-term --terms 3

  # Euler's constant from the integral oracle:
  python run.py compute --n 0 --method oracle

  # First table of constants as CSV:
  python run.py table --which 1 --format csv

  # One-term values around n = 137:
  python run.py scan --lo 137.0 --hi 137.02 --step 0.001

  # Identity checks of the oracle:
  python run.py verify
            """
        )
        subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_RaisingParser)

        compute = subparsers.add_parser("compute", parents=[common], help="Compute gamma_n by one method")
        compute.add_argument(
            "--n",
            type=float,
            nargs="+",
            required=True,
            help="Index or indices (real values allowed for one-term and kc)"
        )
        compute.add_argument(
            "--method",
            choices=METHODS,
            default="m-term",
            help="Approximation method (default: m-term)"
        )
        compute.add_argument(
            "--kc-path",
            choices=KC_PATHS,
            default=KC_DEFAULT_PATH,
            help="Knessl-Coffey evaluation: the closed form (default) or its integral"
        )

        table = subparsers.add_parser("table", parents=[common], help="Reproduce a published table")
        table.add_argument(
            "--which",
            type=int,
            choices=(1, 2, 3),
            required=True,
            help="1: n = 2..20, 2: selected large n, 3: relative errors above 5 %%"
        )

        scan = subparsers.add_parser("scan", parents=[common], help="One-term values on a real grid of n")
        scan.add_argument("--center", type=float, default=SCAN_CENTER, help="Grid center (default: 137)")
        scan.add_argument("--lo", type=float, help="Grid start (default: center - 0.02)")
        scan.add_argument("--hi", type=float, help="Grid end (default: center + 0.02)")
        scan.add_argument("--step", type=float, default=SCAN_STEP, help="Grid spacing (default: 0.001)")

        subparsers.add_parser("verify", parents=[common], help="Run the integral identity checks")

        return parser

    @staticmethod
    def parse_to_config(args: argparse.Namespace) -> Dict[str, Any]:
        """Convert parsed arguments to configuration dictionary."""
        config: Dict[str, Any] = {
            "command": args.command,
            "format": args.format,
            "output": Path(args.output) if args.output else None,
            "paper_format": args.paper_format,
            "terms": args.terms,
            "shared_saddle": args.shared_saddle,
            "form": args.form,
            "fixtures": Path(args.fixtures) if args.fixtures else None,
            "workers": args.workers,
            "timings": args.timings,
            "debug": args.debug,
        }

        if args.command == "compute":
            config["n"] = list(args.n)
            config["method"] = args.method
            config["kc_path"] = args.kc_path
        elif args.command == "table":
            config["which"] = args.which
        elif args.command == "scan":
            center = args.center
            config["center"] = center
            config["lo"] = args.lo if args.lo is not None else center - SCAN_HALF_WIDTH
            config["hi"] = args.hi if args.hi is not None else center + SCAN_HALF_WIDTH
            config["step"] = args.step

        return config

    @staticmethod
    def validate_args(args: argparse.Namespace) -> tuple[bool, Optional[str]]:
        """Validate parsed arguments."""
        if args.terms < 1:
            return False, f"--terms must be at least 1, got {args.terms}"

        if args.workers < 1:
            return False, f"--workers must be at least 1, got {args.workers}"

        if args.fixtures and not Path(args.fixtures).exists():
            return False, f"Fixture file not found: {args.fixtures}"

        if args.command == "compute":
            if args.method in INTEGER_METHODS:
                fractional = [n for n in args.n if not float(n).is_integer()]
                if fractional:
                    return False, f"--method {args.method} needs integer indices, got {fractional[0]}"
            if args.kc_path != KC_DEFAULT_PATH and args.method != "kc":
                return False, "--kc-path only applies to --method kc"

        if args.command == "scan":
            lo = args.lo if args.lo is not None else args.center - SCAN_HALF_WIDTH
            hi = args.hi if args.hi is not None else args.center + SCAN_HALF_WIDTH
            if not lo < hi:
                return False, f"scan needs lo < hi, got lo={lo} hi={hi}"
            if not args.step > 0:
                return False, f"--step must be positive, got {args.step}"

        return True, None
