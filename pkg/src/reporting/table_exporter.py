"""
Table Exporter - Writes records as CSV or JSON documents
"""

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO

from jsonschema import Draft7Validator

from src.core.errors import ConfigurationError

FORMATS = ("csv", "json")

OUTPUT_SCHEMA = {
    "type": "object",
    "required": ["table", "columns", "rows"],
    "properties": {
        "table": {"type": "string"},
        "columns": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": {"type": ["string", "null"]},
            },
        },
    },
}


class TableExporter:
    """
    Renders rows of pre-formatted string cells with a fixed column order.
    Identical inputs give byte-identical output.
    """

    def __init__(self, fmt: str = "csv"):
        """
        Initialize exporter.

        Args:
            fmt: 'csv' or 'json'
        """
        if fmt not in FORMATS:
            raise ConfigurationError(f"unknown output format {fmt!r}; expected one of {', '.join(FORMATS)}")
        self.fmt = fmt

    def render(self, table: str, columns: Sequence[str], rows: List[Dict[str, Optional[str]]]) -> str:
        if self.fmt == "csv":
            return self._render_csv(columns, rows)
        return self._render_json(table, columns, rows)

    @staticmethod
    def _render_csv(columns: Sequence[str], rows: List[Dict[str, Optional[str]]]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow(["" if row.get(c) is None else row[c] for c in columns])
        return buffer.getvalue()

    @staticmethod
    def _render_json(table: str, columns: Sequence[str], rows: List[Dict[str, Optional[str]]]) -> str:
        document: Dict[str, Any] = {
            "table": table,
            "columns": list(columns),
            "rows": [{c: row.get(c) for c in columns} for row in rows],
        }
        Draft7Validator(OUTPUT_SCHEMA).validate(document)
        return json.dumps(document, indent=2) + "\n"

    def write(
        self,
        table: str,
        columns: Sequence[str],
        rows: List[Dict[str, Optional[str]]],
        output: Optional[Path] = None,
        stream: Optional[TextIO] = None,
    ) -> None:
        """Write to `output` when given, otherwise to `stream` (stdout by default)."""
        text = self.render(table, columns, rows)
        if output is not None:
            with open(output, 'w', newline='', encoding='utf-8') as f:
                f.write(text)
            return
        (stream or sys.stdout).write(text)


def parse_csv(text: str) -> tuple:
    """Inverse of the CSV rendering: (columns, rows) with '' read back as None."""
    reader = csv.reader(io.StringIO(text))
    columns = next(reader)
    rows = [{c: (v if v != "" else None) for c, v in zip(columns, line)} for line in reader]
    return columns, rows
