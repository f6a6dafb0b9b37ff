import pytest

from src.cli.parser import ArgumentParser
from src.core.errors import UsageError


def _parse(*argv):
    parser = ArgumentParser.create_parser()
    return parser.parse_args(list(argv))


class TestDefaults:

    def test_compute(self):
        args = _parse("compute", "--n", "137")
        config = ArgumentParser.parse_to_config(args)
        assert config["n"] == [137.0]
        assert config["method"] == "m-term"
        assert config["terms"] == 3
        assert config["format"] == "csv"
        assert config["output"] is None
        assert config["kc_path"] == "closed_form"

    def test_several_indices(self):
        config = ArgumentParser.parse_to_config(_parse("compute", "--n", "2", "3", "20", "--method", "one-term"))
        assert config["n"] == [2.0, 3.0, 20.0]

    def test_scan_window(self):
        config = ArgumentParser.parse_to_config(_parse("scan"))
        assert config["lo"] == pytest.approx(136.98)
        assert config["hi"] == pytest.approx(137.02)
        assert config["step"] == 0.001

    def test_table(self):
        config = ArgumentParser.parse_to_config(_parse("table", "--which", "3", "--paper-format"))
        assert config["which"] == 3
        assert config["paper_format"]


class TestUsageErrors:

    @pytest.mark.parametrize("argv", [
        [],
        ["compute"],
        ["compute", "--n", "5", "--method", "exact"],
        ["table", "--which", "4"],
        ["compute", "--n", "five"],
    ])
    def test_raises_instead_of_exiting(self, argv):
        with pytest.raises(UsageError):
            _parse(*argv)


class TestValidation:

    @pytest.mark.parametrize("argv", [
        ["compute", "--n", "5", "--terms", "0"],
        ["compute", "--n", "5", "--workers", "0"],
        ["compute", "--n", "137.5", "--method", "m-term"],
        ["compute", "--n", "5", "--method", "one-term", "--kc-path", "zeros"],
        ["compute", "--n", "5.5", "--method", "reference"],
        ["compute", "--n", "5", "--fixtures", "/nonexistent/gamma.csv"],
        ["scan", "--lo", "137.1", "--hi", "137.0"],
        ["scan", "--step", "0"],
    ])
    def test_rejected(self, argv):
        valid, message = ArgumentParser.validate_args(_parse(*argv))
        assert not valid
        assert message

    def test_fractional_index_for_one_term(self):
        assert ArgumentParser.validate_args(_parse("compute", "--n", "137.017", "--method", "one-term")) == (True, None)
