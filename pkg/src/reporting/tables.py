"""
Builders for the published tables
Exact values come from the reference fixtures; the M-term, one-term and
Knessl-Coffey columns are recomputed.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple, Union

from src.numerics.asymptotics import gamma_knessl_coffey, gamma_m_term, gamma_one_term
from src.numerics.models import QuadratureConfig, ReferenceRow, SignedLog, StieltjesEstimate
from src.numerics.reference import LARGE_ERROR_THRESHOLD, large_error_rows
from src.reporting.formatting import format_cell, format_n, format_percent

GAMMA_COLUMNS: Tuple[str, ...] = ("n", "exact", "m3", "one_term", "kc")
ERROR_COLUMNS: Tuple[str, ...] = ("n", "relative_error")

TABLE_COLUMNS = {1: GAMMA_COLUMNS, 2: GAMMA_COLUMNS, 3: ERROR_COLUMNS}


@dataclass(frozen=True)
class TableOptions:
    """Settings shared by every row of one table (picklable for worker processes)"""
    terms: int = 3
    shared_saddle: bool = False
    form: str = "listing"
    paper_format: bool = False
    cfg: QuadratureConfig = field(default_factory=QuadratureConfig)


def estimate_cell(estimate: StieltjesEstimate) -> Union[float, SignedLog]:
    """Value for finite estimates, the log form once the double range is left."""
    return estimate.signed_log if estimate.overflowed else estimate.value


def gamma_table_row(reference: ReferenceRow, options: TableOptions) -> Dict[str, Optional[str]]:
    """One row of the first- or second-table layout."""
    n = reference.n
    m_term = gamma_m_term(n, options.terms, shared_saddle=options.shared_saddle, form=options.form)
    one_term = gamma_one_term(n, form=options.form)
    # the published first table has no Knessl-Coffey entry at n = 2
    if options.paper_format and n == 2:
        kc_cell = None
    else:
        kc_cell = estimate_cell(gamma_knessl_coffey(n, options.cfg))

    paper = options.paper_format
    return {
        "n": format_n(n),
        "exact": format_cell(reference.exact, paper),
        "m3": format_cell(estimate_cell(m_term), paper),
        "one_term": format_cell(estimate_cell(one_term), paper),
        "kc": format_cell(kc_cell, paper),
    }


def error_table_rows(
    references: Iterable[ReferenceRow],
    options: TableOptions,
    threshold: float = LARGE_ERROR_THRESHOLD,
) -> List[Dict[str, Optional[str]]]:
    """Rows whose M-term relative error exceeds the threshold."""
    rows = []
    for report in large_error_rows(references, threshold, options.terms):
        relative = format_percent(report.relative_error) if options.paper_format else format_cell(
            report.relative_error
        )
        rows.append({"n": format_n(report.n), "relative_error": relative})
    return rows
