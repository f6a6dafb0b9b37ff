import json

import pytest
from jsonschema import Draft7Validator

from src.core.errors import ConfigurationError
from src.reporting.table_exporter import OUTPUT_SCHEMA, TableExporter, parse_csv

COLUMNS = ("n", "value", "sign")
ROWS = [
    {"n": "2", "value": "-9.690363192e-03", "sign": None},
    {"n": "800", "value": None, "sign": "1"},
]


class TestTableExporter:

    def test_csv_reads_back(self):
        text = TableExporter("csv").render("compute", COLUMNS, ROWS)
        assert text.splitlines()[0] == "n,value,sign"
        assert text.endswith("\n")
        columns, rows = parse_csv(text)
        assert columns == list(COLUMNS)
        assert rows == ROWS

    def test_json_document(self):
        text = TableExporter("json").render("compute", COLUMNS, ROWS)
        document = json.loads(text)
        assert not list(Draft7Validator(OUTPUT_SCHEMA).iter_errors(document))
        assert document["table"] == "compute"
        assert document["rows"][1]["value"] is None

    def test_output_is_deterministic(self):
        exporter = TableExporter("json")
        assert exporter.render("t", COLUMNS, ROWS) == exporter.render("t", COLUMNS, ROWS)

    def test_unknown_format(self):
        with pytest.raises(ConfigurationError):
            TableExporter("xlsx")

    def test_write_to_file(self, tmp_path):
        path = tmp_path / "out.csv"
        TableExporter("csv").write("compute", COLUMNS, ROWS, output=path)
        assert path.read_text(encoding="utf-8") == TableExporter("csv").render("compute", COLUMNS, ROWS)
