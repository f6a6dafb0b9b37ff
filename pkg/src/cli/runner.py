"""
Main CLI runner that coordinates all CLI components.
"""

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO

from src.core.errors import (
    AccuracyError,
    ConfigurationError,
    ConvergenceError,
    DomainError,
    FixtureIntegrityError,
    GammaOverflowError,
    RangeError,
    UsageError,
)
from src.numerics.models import ReferenceRow
from src.numerics.reference import load_external_fixtures, load_reference
from src.reporting.performance import PerformanceTracker
from src.reporting.table_exporter import TableExporter
from src.reporting.tables import TABLE_COLUMNS, TableOptions

from .commands import (
    CHECK_COLUMNS,
    ComputeFlags,
    Mapper,
    check_row,
    cmd_compute,
    cmd_scan,
    cmd_table,
    cmd_verify,
    record_columns,
    record_row,
)
from .config import CLIConfig
from .display import Display
from .parser import ArgumentParser

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2
EXIT_INTERRUPTED = 130

USAGE_ERRORS = (UsageError, DomainError, RangeError, ConfigurationError)
NUMERIC_ERRORS = (AccuracyError, ConvergenceError, GammaOverflowError, FixtureIntegrityError)


class CLIRunner:
    """Main runner for the CLI application."""

    def __init__(self, argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None):
        self.display = Display()
        self.config_manager = CLIConfig()
        self.parser = ArgumentParser.create_parser()
        self.tracker = PerformanceTracker()
        self.argv = argv
        self.stdout = stdout

    def run(self) -> int:
        """Main entry point for the CLI; returns the process exit code."""
        config: Dict[str, Any] = {}
        try:
            args = self.parser.parse_args(self.argv)

            is_valid, error = ArgumentParser.validate_args(args)
            if not is_valid:
                self.display.print_error(f"Invalid arguments: {error}")
                return EXIT_USAGE

            config = ArgumentParser.parse_to_config(args)
            self.config_manager.setup_environment(config["debug"])

            is_valid, error = self.config_manager.validate_configuration(config)
            if not is_valid:
                self.display.print_error(f"Configuration error: {error}")
                return EXIT_USAGE

            return self._dispatch(config)

        except KeyboardInterrupt:
            self.display.print_warning("Stopped by user")
            return EXIT_INTERRUPTED
        except USAGE_ERRORS as e:
            self._report(e, config)
            return EXIT_USAGE
        except NUMERIC_ERRORS as e:
            self._report(e, config)
            return EXIT_NUMERIC
        except Exception as e:
            self._report(e, config, prefix="Execution failed")
            return EXIT_USAGE

    def _report(self, error: Exception, config: Dict[str, Any], prefix: str = ""):
        label = prefix or type(error).__name__
        self.display.print_error(f"{label}: {error}")
        if config.get("debug"):
            import traceback
            traceback.print_exc()

    @staticmethod
    @contextmanager
    def _mapper(workers: int) -> Iterator[Mapper]:
        """builtin map, or an ordered process-pool map when workers > 1."""
        if workers <= 1:
            yield map
            return
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield pool.map

    @staticmethod
    def _references(config: Dict[str, Any]) -> List[ReferenceRow]:
        """Published rows, then external rows; an external row replaces a published one with the same n."""
        merged = {row.n: row for row in load_reference()}
        if config.get("fixtures") is not None:
            for row in load_external_fixtures(config["fixtures"]):
                merged[row.n] = row
        return list(merged.values())

    def _dispatch(self, config: Dict[str, Any]) -> int:
        command = config["command"]
        cfg = self.config_manager.quadrature_config()
        exporter = TableExporter(config["format"])
        paper = config["paper_format"]
        timings = config["timings"]
        exit_code = EXIT_OK

        with self._mapper(config["workers"]) as mapper:
            if command == "compute":
                references = {row.n: row for row in self._references(config)}
                flags = ComputeFlags(config["shared_saddle"], config["form"], config["kc_path"], cfg)
                records = cmd_compute(config["n"], config["method"], config["terms"], flags, references, mapper)
                table, columns = "compute", record_columns(timings)
                rows = [record_row(r, paper, timings) for r in records]
            elif command == "scan":
                records = cmd_scan(config["center"], config["lo"], config["hi"], config["step"],
                                   config["form"], mapper)
                table, columns = "scan", record_columns(timings)
                rows = [record_row(r, paper, timings) for r in records]
            elif command == "table":
                options = TableOptions(config["terms"], config["shared_saddle"], config["form"], paper, cfg)
                records = []
                table, columns = f"table{config['which']}", TABLE_COLUMNS[config["which"]]
                rows = cmd_table(config["which"], options, self._references(config), mapper)
            else:
                records = []
                checks = cmd_verify(cfg)
                table, columns = "verify", CHECK_COLUMNS
                rows = [check_row(c) for c in checks]
                failed = [c for c in checks if not c.passed]
                for check in failed:
                    self.display.print_error(
                        f"{check.check} {check.argument}: residual {check.residual:.3e} > {check.threshold:.0e}"
                    )
                if failed:
                    exit_code = EXIT_NUMERIC
                else:
                    self.display.print_info(f"All {len(checks)} identity checks passed")

        for record in records:
            self.tracker.record(record.method, record.runtime_ms or 0.0)
        if records:
            logger.debug(f"[CLI] {self.tracker.get_performance_summary()}")

        exporter.write(table, columns, rows, output=config["output"], stream=self.stdout)
        return exit_code


def main():
    """Main entry point for the CLI."""
    runner = CLIRunner()
    exit_code = runner.run()
    sys.exit(exit_code)
