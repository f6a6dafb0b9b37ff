"""
Subcommand implementations.
Pure functions of their arguments; the runner handles I/O and supplies the
mapper (builtin map or a process pool's ordered map).
"""

import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.core.errors import DomainError
from src.numerics.asymptotics import (
    KC_DEFAULT_PATH,
    gamma_knessl_coffey,
    gamma_leading_order,
    gamma_m_term,
    gamma_one_term,
)
from src.numerics.models import QuadratureConfig, ReferenceRow, ReferenceSource, StieltjesEstimate
from src.numerics.quadrature_oracle import (
    alternating_mu_sum,
    gamma_oracle,
    kernel_mass,
    verify_hurwitz_identity,
    verify_integral_identity,
)
from src.numerics.reference import relative_error
from src.reporting.formatting import format_cell, format_n
from src.reporting.models import CheckRecord, OutputRecord
from src.reporting.performance import PerformanceTracker
from src.reporting.tables import TableOptions, error_table_rows, gamma_table_row

logger = logging.getLogger(__name__)

Mapper = Callable[[Callable, Iterable], Iterable]
Row = Dict[str, Optional[str]]

RECORD_COLUMNS = ("n", "method", "M", "value", "sign", "log10_magnitude", "relative_error_vs_reference")
CHECK_COLUMNS = ("check", "argument", "residual", "threshold", "passed")

INTEGRAL_IDENTITY_POINTS = (0.5, 2.0, 3.0)
HURWITZ_IDENTITY_POINTS = ((2.0, 1.0), (2.0, 0.5), (3.0, 0.25))
ALTERNATING_SUM_K = 40
IDENTITY_THRESHOLD = 1e-10
HURWITZ_THRESHOLD = 1e-8
ALTERNATING_THRESHOLD = 1e-6


@dataclass(frozen=True)
class ComputeFlags:
    """Method options; picklable so tasks can cross into worker processes"""
    shared_saddle: bool = False
    form: str = "listing"
    kc_path: str = KC_DEFAULT_PATH
    cfg: QuadratureConfig = field(default_factory=QuadratureConfig)


def _as_index(n: float) -> int:
    if not float(n).is_integer():
        raise DomainError(f"this method needs an integer index, got {n}")
    return int(n)


def _run_method(n: float, method: str, terms: int, flags: ComputeFlags) -> StieltjesEstimate:
    if method == "one-term":
        return gamma_one_term(n, form=flags.form)
    if method == "m-term":
        return gamma_m_term(_as_index(n), terms, shared_saddle=flags.shared_saddle, form=flags.form)
    if method == "leading":
        return gamma_leading_order(_as_index(n))
    if method == "kc":
        return gamma_knessl_coffey(n, flags.cfg, path=flags.kc_path)
    if method == "oracle":
        return gamma_oracle(_as_index(n), flags.cfg)
    raise DomainError(f"unknown method {method!r}")


def timed_estimate(n: float, method: str, terms: int, flags: ComputeFlags) -> Tuple[StieltjesEstimate, float]:
    """One estimate and its runtime in milliseconds."""
    tracker = PerformanceTracker()
    timing_id = tracker.start_timing(method, n)
    try:
        result = _run_method(n, method, terms, flags)
    except Exception as e:
        tracker.end_timing(timing_id, success=False, error=str(e))
        raise
    return result, tracker.end_timing(timing_id)


def to_record(
    result: StieltjesEstimate,
    runtime_ms: float,
    references: Dict[int, ReferenceRow],
) -> OutputRecord:
    """Attach the relative error against a reference row when one exists for n."""
    rel: Optional[float] = None
    if float(result.n).is_integer() and int(result.n) in references:
        rel, _ = relative_error(result, references[int(result.n)].exact)
    return OutputRecord.from_estimate(result, relative_error=rel, runtime_ms=runtime_ms)


# ==================== compute / scan ====================

def _reference_row(n: float, references: Dict[int, ReferenceRow]) -> ReferenceRow:
    row = references.get(_as_index(n))
    if row is None:
        raise DomainError(f"no reference value for n={format_n(n)}")
    return row


def cmd_compute(
    ns: Sequence[float],
    method: str,
    terms: int,
    flags: ComputeFlags,
    references: Dict[int, ReferenceRow],
    mapper: Mapper = map,
) -> List[OutputRecord]:
    """One record per index, in the order given."""
    if method == "reference":
        return [to_record(_reference_row(n, references).as_estimate(), 0.0, references) for n in ns]
    worker = partial(timed_estimate, method=method, terms=terms, flags=flags)
    return [to_record(result, ms, references) for result, ms in mapper(worker, ns)]


def scan_grid(lo: float, hi: float, step: float) -> List[float]:
    """lo + i*step up to hi, rounded to ten decimals so 137.017 prints as such."""
    count = int(np.floor((hi - lo) / step + 1e-9)) + 1
    return [round(float(x), 10) for x in lo + step * np.arange(count)]


def cmd_scan(
    n_center: float,
    n_lo: float,
    n_hi: float,
    step: float,
    form: str = "listing",
    mapper: Mapper = map,
) -> List[OutputRecord]:
    """One-term values over a real grid of n."""
    grid = scan_grid(n_lo, n_hi, step)
    logger.info(f"[CLI] scan around n={n_center}: {len(grid)} points in [{n_lo}, {n_hi}]")
    worker = partial(timed_estimate, method="one-term", terms=1, flags=ComputeFlags(form=form))
    return [OutputRecord.from_estimate(result, runtime_ms=ms) for result, ms in mapper(worker, grid)]


def record_columns(timings: bool) -> Tuple[str, ...]:
    return RECORD_COLUMNS + ("runtime_ms",) if timings else RECORD_COLUMNS


def record_row(record: OutputRecord, paper: bool, timings: bool) -> Row:
    row: Row = {
        "n": format_n(record.n),
        "method": record.method,
        "M": str(record.M),
        "value": format_cell(record.value, paper),
        "sign": None if record.sign is None else str(record.sign),
        "log10_magnitude": None if record.log10_magnitude is None else f"{record.log10_magnitude:.6f}",
        "relative_error_vs_reference": format_cell(record.relative_error_vs_reference),
    }
    if timings:
        row["runtime_ms"] = f"{record.runtime_ms or 0.0:.3f}"
    return row


# ==================== table ====================

_TABLE_SOURCES = {1: ReferenceSource.PAPER_TABLE1, 2: ReferenceSource.PAPER_TABLE2}


def cmd_table(
    which: int,
    options: TableOptions,
    references: Sequence[ReferenceRow],
    mapper: Mapper = map,
) -> List[Row]:
    """
    Rows of the requested table. The relative-error table is drawn from every
    reference row passed in, external fixtures included.
    """
    if which == 3:
        return error_table_rows(references, options)
    if which not in _TABLE_SOURCES:
        raise DomainError(f"no table {which}; expected 1, 2 or 3")
    rows = [r for r in references if r.source is _TABLE_SOURCES[which]]
    return list(mapper(partial(gamma_table_row, options=options), rows))


# ==================== verify ====================

def cmd_verify(cfg: QuadratureConfig) -> List[CheckRecord]:
    """Residuals of the oracle's identity checks, in a fixed order."""
    checks = []
    for s in INTEGRAL_IDENTITY_POINTS:
        residual = verify_integral_identity(s, cfg)
        checks.append(CheckRecord("integral_identity", f"s={s:g}", residual, IDENTITY_THRESHOLD))
    for s, a in HURWITZ_IDENTITY_POINTS:
        residual = verify_hurwitz_identity(s, a, cfg)
        checks.append(CheckRecord("hurwitz_identity", f"s={s:g};a={a:g}", residual, HURWITZ_THRESHOLD))
    checks.append(CheckRecord("kernel_mass", "mu", abs(kernel_mass(cfg) - 0.5), IDENTITY_THRESHOLD))
    checks.append(CheckRecord(
        "alternating_mu_sum", f"K={ALTERNATING_SUM_K}",
        abs(alternating_mu_sum(ALTERNATING_SUM_K, cfg)), ALTERNATING_THRESHOLD,
    ))
    for check in checks:
        logger.info(f"[CLI] {check.check} {check.argument}: residual {check.residual:.3e}")
    return checks


def check_row(check: CheckRecord) -> Row:
    return {
        "check": check.check,
        "argument": check.argument,
        "residual": format_cell(check.residual),
        "threshold": format_cell(check.threshold),
        "passed": format_cell(check.passed),
    }
