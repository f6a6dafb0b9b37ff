import io
import json

import pytest

from src.cli.runner import CLIRunner
from src.core.errors import ConvergenceError, FixtureIntegrityError
from src.reporting.table_exporter import parse_csv


def run_cli(*argv):
    stdout = io.StringIO()
    code = CLIRunner(list(argv), stdout=stdout).run()
    return code, stdout.getvalue()


def rows_of(text):
    return parse_csv(text)[1]


class TestCompute:

    def test_three_terms_at_137(self):
        code, out = run_cli("compute", "--n", "137", "--method", "m-term", "--terms", "3")
        assert code == 0
        (row,) = rows_of(out)
        assert row["method"] == "m_term" and row["M"] == "3"
        assert row["value"].startswith("-3.48")
        assert float(row["relative_error_vs_reference"]) == pytest.approx(-0.5641, abs=0.02)

    def test_overflow_row(self):
        code, out = run_cli("compute", "--n", "800")
        assert code == 0
        (row,) = rows_of(out)
        assert row["value"] is None
        assert row["sign"] == "1"
        assert float(row["log10_magnitude"]) == pytest.approx(369.6914, abs=1e-3)

    def test_json_and_timings(self):
        code, out = run_cli("compute", "--n", "5", "20", "--method", "one-term", "--format", "json", "--timings")
        assert code == 0
        document = json.loads(out)
        assert document["columns"][-1] == "runtime_ms"
        assert [row["n"] for row in document["rows"]] == ["5", "20"]

    def test_output_file(self, tmp_path):
        path = tmp_path / "gamma.csv"
        code, out = run_cli("compute", "--n", "10", "--output", str(path))
        assert code == 0 and out == ""
        assert rows_of(path.read_text(encoding="utf-8"))[0]["n"] == "10"

    def test_external_fixture_sets_reference(self, tmp_path):
        fixtures = tmp_path / "gamma.csv"
        fixtures.write_text("41,1\n")
        code, out = run_cli("compute", "--n", "41", "--fixtures", str(fixtures))
        assert code == 0
        assert rows_of(out)[0]["relative_error_vs_reference"] is not None

    def test_knessl_coffey_closed_form(self):
        code, out = run_cli("compute", "--n", "5", "137", "--method", "kc")
        assert code == 0
        first, second = rows_of(out)
        assert first["method"] == "knessl_coffey"
        assert float(first["value"]) == pytest.approx(0.0008129648, rel=1e-6)
        assert float(second["value"]) == pytest.approx(3.89874e27, rel=1e-5)

    def test_reference_method(self):
        code, out = run_cli("compute", "--n", "9", "137", "--method", "reference")
        assert code == 0
        first, second = rows_of(out)
        assert first["method"] == "reference"
        assert float(first["value"]) == pytest.approx(-0.000034394774, rel=1e-9)
        assert float(second["value"]) == pytest.approx(-7.993e27, rel=1e-9)
        assert float(first["relative_error_vs_reference"]) == pytest.approx(0.0, abs=1e-12)


class TestScan:

    def test_checkpoints(self):
        code, out = run_cli("scan")
        assert code == 0
        rows = {row["n"]: row for row in rows_of(out)}
        assert len(rows) == 41
        assert not rows["137.017"]["value"].startswith("-")
        assert rows["137.018"]["value"].startswith("-")

    def test_deterministic_across_workers(self):
        argv = ("scan", "--lo", "137.0", "--hi", "137.01", "--step", "0.001")
        assert run_cli(*argv) == run_cli(*argv, "--workers", "2")


class TestTable:

    def test_relative_error_table(self):
        code, out = run_cli("table", "--which", "3", "--paper-format")
        assert code == 0
        rows = rows_of(out)
        assert [row["n"] for row in rows] == ["2", "3", "4", "6", "137"]
        assert rows[0]["relative_error"] == "-13.50"


class TestExitCodes:

    @pytest.mark.parametrize("argv", [
        ["compute", "--n", "1", "--method", "m-term"],
        ["compute", "--n", "5", "--terms", "0"],
        ["compute", "--n", "1.5", "--method", "oracle"],
        ["compute", "--n", "21", "--method", "reference"],
        ["compute", "--n", "2.5", "--method", "reference"],
        ["frobnicate"],
    ])
    def test_usage_and_domain_errors(self, argv):
        code, out = run_cli(*argv)
        assert code == 1
        assert out == ""

    def test_integrity_failure(self, monkeypatch):
        def broken():
            raise FixtureIntegrityError("checksum mismatch for table1.json")

        monkeypatch.setattr("src.cli.runner.load_reference", broken)
        assert run_cli("compute", "--n", "5")[0] == 2

    def test_convergence_failure(self, monkeypatch):
        def diverges(n, cfg, path="closed_form"):
            raise ConvergenceError("no convergence", residual=1.0)

        monkeypatch.setattr("src.cli.commands.gamma_knessl_coffey", diverges)
        assert run_cli("compute", "--n", "5", "--method", "kc")[0] == 2


@pytest.mark.slow
class TestOracleCommands:

    def test_euler_constant(self):
        code, out = run_cli("compute", "--n", "0", "--method", "oracle")
        assert code == 0
        assert float(rows_of(out)[0]["value"]) == pytest.approx(0.5772156649, abs=1e-8)

    def test_verify(self):
        code, out = run_cli("verify")
        assert code == 0
        rows = rows_of(out)
        assert len(rows) == 8
        assert all(row["passed"] == "true" for row in rows)
