"""
Reference values and error metrics
Loads the published tables from JSON fixtures under src/configs/reference,
checks them against a SHA-256 manifest and a JSON schema, and measures the
relative error of estimates against them.
"""

import hashlib
import json
import logging
import math
from decimal import Decimal, InvalidOperation, localcontext
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

from jsonschema import Draft7Validator

from src.core.errors import DomainError, FixtureIntegrityError
from src.numerics.models import (
    ErrorReport,
    Method,
    ReferenceRow,
    ReferenceSource,
    SignedLog,
    StieltjesEstimate,
)

logger = logging.getLogger(__name__)

Real = Union[float, int, Decimal, SignedLog, StieltjesEstimate]

DECIMAL_PATTERN = r"^-?[0-9]+(\.[0-9]+)?(e[+-]?[0-9]+)?$"
TABLE_FILES = ("table1.json", "table2.json", "table3.json", "conditioning.json")
LARGE_ERROR_THRESHOLD = 0.05

_DECIMAL = {"type": "string", "pattern": DECIMAL_PATTERN}
_OPTIONAL_DECIMAL = {"anyOf": [_DECIMAL, {"type": "null"}]}

GAMMA_TABLE_SCHEMA = {
    "type": "object",
    "required": ["table", "source", "rows"],
    "properties": {
        "table": {"type": "string"},
        "source": {"enum": [s.value for s in ReferenceSource]},
        "description": {"type": "string"},
        "rows": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["n", "gamma_exact", "m3", "one_term", "kc"],
                "additionalProperties": False,
                "properties": {
                    "n": {"type": "integer", "minimum": 0},
                    "gamma_exact": _DECIMAL,
                    "m3": _OPTIONAL_DECIMAL,
                    "one_term": _OPTIONAL_DECIMAL,
                    "kc": _OPTIONAL_DECIMAL,
                    "gamma_corrected": _DECIMAL,
                    "kc_corrected": _DECIMAL,
                    "note": {"type": "string"},
                },
            },
        },
    },
}

ERROR_TABLE_SCHEMA = {
    "type": "object",
    "required": ["table", "threshold_percent", "rows"],
    "properties": {
        "table": {"const": "table3"},
        "threshold_percent": _DECIMAL,
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "relative_error_percent"],
                "additionalProperties": False,
                "properties": {
                    "n": {"type": "integer", "minimum": 2},
                    "relative_error_percent": _DECIMAL,
                },
            },
        },
    },
}

CONDITIONING_SCHEMA = {
    "type": "object",
    "required": ["table", "rows"],
    "properties": {
        "table": {"const": "conditioning"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "one_term"],
                "additionalProperties": False,
                "properties": {
                    "n": _DECIMAL,
                    "one_term": _DECIMAL,
                },
            },
        },
    },
}

SCHEMAS = {
    "table1.json": GAMMA_TABLE_SCHEMA,
    "table2.json": GAMMA_TABLE_SCHEMA,
    "table3.json": ERROR_TABLE_SCHEMA,
    "conditioning.json": CONDITIONING_SCHEMA,
}


class ReferenceLoader:
    """Loads and validates the reference fixtures from JSON files."""

    def __init__(self, config_dir: Optional[Path] = None):
        # Path from src/numerics/ to src/configs/reference
        self.config_dir = Path(config_dir) if config_dir else (
            Path(__file__).parent.parent / "configs" / "reference"
        )
        self._documents: Dict[str, dict] = {}
        self._loaded = False

    def _manifest(self) -> Dict[str, str]:
        manifest_file = self.config_dir / "checksums.json"
        if not manifest_file.exists():
            raise FixtureIntegrityError(f"checksum manifest not found: {manifest_file}")
        with open(manifest_file, 'r', encoding='utf-8') as f:
            return json.load(f)

    def _read_verified(self, name: str, expected: Optional[str]) -> dict:
        path = self.config_dir / name
        if not path.exists():
            raise FixtureIntegrityError(f"reference fixture not found: {path}")
        raw = path.read_bytes()
        digest = hashlib.sha256(raw).hexdigest()
        if digest != expected:
            raise FixtureIntegrityError(
                f"checksum mismatch for {name}: expected {expected}, got {digest}"
            )
        try:
            document = json.loads(raw.decode('utf-8'))
        except json.JSONDecodeError as e:
            raise FixtureIntegrityError(f"error parsing JSON in {name}: {e}") from e
        self._validate(name, document)
        return document

    @staticmethod
    def _validate(name: str, document: dict) -> None:
        errors = sorted(Draft7Validator(SCHEMAS[name]).iter_errors(document), key=str)
        if errors:
            first = errors[0]
            location = "/".join(str(p) for p in first.absolute_path) or "<root>"
            raise FixtureIntegrityError(f"{name} fails schema at {location}: {first.message}")

    def load_all(self) -> Dict[str, dict]:
        """Load every fixture named in TABLE_FILES; cached after the first call."""
        if self._loaded:
            return self._documents

        manifest = self._manifest()
        documents = {}
        for name in TABLE_FILES:
            documents[name] = self._read_verified(name, manifest.get(name))
            logger.debug(f"[REFERENCE] Loaded {name} ({len(documents[name]['rows'])} rows)")

        self._documents = documents
        self._loaded = True
        return self._documents

    def document(self, name: str) -> dict:
        return self.load_all()[name]


_default_loader = ReferenceLoader()


def _rows_from_document(document: dict) -> List[ReferenceRow]:
    source = ReferenceSource(document["source"])
    rows = []
    seen = set()
    for entry in document["rows"]:
        n = entry["n"]
        if n in seen:
            raise FixtureIntegrityError(f"duplicate n={n} in {document['table']}")
        seen.add(n)
        rows.append(ReferenceRow(
            n=n,
            gamma_exact=entry["gamma_exact"],
            source=source,
            paper_m3=entry.get("m3"),
            paper_one_term=entry.get("one_term"),
            paper_kc=entry.get("kc"),
            gamma_corrected=entry.get("gamma_corrected"),
            kc_corrected=entry.get("kc_corrected"),
            note=entry.get("note"),
        ))
    return rows


def load_reference(loader: Optional[ReferenceLoader] = None) -> List[ReferenceRow]:
    """
    All rows of the first-twenty table (n = 2..20) followed by the large-n
    table, with every printed column kept as its verbatim decimal string.

    Raises:
        FixtureIntegrityError: checksum or schema mismatch
    """
    loader = loader or _default_loader
    return (
        _rows_from_document(loader.document("table1.json"))
        + _rows_from_document(loader.document("table2.json"))
    )


def reference_by_n(loader: Optional[ReferenceLoader] = None) -> Dict[int, ReferenceRow]:
    return {row.n: row for row in load_reference(loader)}


def load_table3(loader: Optional[ReferenceLoader] = None) -> Dict[int, Decimal]:
    """Printed relative errors (percent) of the three-term approximation."""
    loader = loader or _default_loader
    rows = loader.document("table3.json")["rows"]
    return {row["n"]: Decimal(row["relative_error_percent"]) for row in rows}


def load_conditioning_points(loader: Optional[ReferenceLoader] = None) -> List[Tuple[float, Decimal]]:
    """Published one-term values around n = 137 as (n, value) pairs."""
    loader = loader or _default_loader
    rows = loader.document("conditioning.json")["rows"]
    return [(float(row["n"]), Decimal(row["one_term"])) for row in rows]


def load_external_fixtures(path: Union[str, Path]) -> List[ReferenceRow]:
    """
    Parse a user-supplied high-precision file: one `n,gamma` pair per line,
    gamma as a decimal string, lines starting with '#' ignored.
    """
    path = Path(path)
    if not path.exists():
        raise FixtureIntegrityError(f"fixture file not found: {path}")

    rows = []
    seen = set()
    with open(path, 'r', encoding='utf-8') as f:
        for lineno, line in enumerate(f, start=1):
            text = line.strip()
            if not text or text.startswith('#'):
                continue
            parts = [p.strip() for p in text.split(',')]
            if len(parts) != 2:
                raise FixtureIntegrityError(f"{path}:{lineno}: expected 'n,gamma', got {text!r}")
            try:
                n = int(parts[0])
                value = Decimal(parts[1])
            except (ValueError, InvalidOperation) as e:
                raise FixtureIntegrityError(f"{path}:{lineno}: cannot parse {text!r}") from e
            if not value.is_finite():
                raise FixtureIntegrityError(f"{path}:{lineno}: gamma must be finite")
            if n in seen:
                raise FixtureIntegrityError(f"{path}:{lineno}: duplicate n={n}")
            seen.add(n)
            rows.append(ReferenceRow(n=n, gamma_exact=parts[1], source=ReferenceSource.EXTERNAL_HIGHPREC))

    logger.info(f"[REFERENCE] Loaded {len(rows)} external rows from {path}")
    return rows


# ==================== Error metrics ====================

def _as_decimal(value: Real) -> Optional[Decimal]:
    """Exact Decimal for finite inputs; None when only a log magnitude exists."""
    if isinstance(value, Decimal):
        return value
    if isinstance(value, SignedLog):
        return None
    if isinstance(value, StieltjesEstimate):
        value = value.value
    x = float(value)
    if math.isinf(x) or math.isnan(x):
        return None
    return Decimal(x)


def relative_error(approx: Real, exact: Real) -> Tuple[float, bool]:
    """
    Signed relative error (approx - exact)/exact and whether the signs agree.

    Works across the double range: estimates that only carry a log10
    magnitude are compared through their SignedLog.

    Raises:
        DomainError: exact is zero
    """
    approx_log = SignedLog.from_value(approx)
    exact_log = SignedLog.from_value(exact)
    if exact_log.sign == 0:
        raise DomainError("relative error is undefined for exact = 0")
    sign_correct = approx_log.sign == exact_log.sign

    a, e = _as_decimal(approx), _as_decimal(exact)
    if a is not None and e is not None:
        with localcontext() as ctx:
            ctx.prec = 40
            return float((a - e) / e), sign_correct

    if approx_log.sign == 0:
        return -1.0, sign_correct
    ratio = approx_log.sign * exact_log.sign * 10.0 ** (approx_log.log10_magnitude - exact_log.log10_magnitude)
    return ratio - 1.0, sign_correct


def error_report(n: float, method: Method, approx: Real, exact: Real) -> ErrorReport:
    rel, sign_correct = relative_error(approx, exact)
    return ErrorReport(
        n=n,
        method=method,
        approx=SignedLog.from_value(approx),
        exact=SignedLog.from_value(exact),
        relative_error=rel,
        sign_correct=sign_correct,
    )


def large_error_rows(
    rows: Iterable[ReferenceRow],
    threshold: float = LARGE_ERROR_THRESHOLD,
    terms: int = 3,
) -> List[ErrorReport]:
    """Rows whose M-term estimate is off by more than threshold, in index order."""
    from src.numerics.asymptotics import gamma_m_term

    reports = []
    for row in sorted(rows, key=lambda r: r.n):
        if row.n < 2:
            continue
        estimate = gamma_m_term(row.n, terms)
        report = error_report(row.n, Method.M_TERM, estimate, row.exact)
        if abs(report.relative_error) > threshold:
            logger.debug(f"[REFERENCE] n={row.n} relative error {report.relative_error_percent:.2f}%")
            reports.append(report)
    return reports
