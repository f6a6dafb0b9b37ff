import math
from decimal import Decimal

import pytest

from src.numerics.models import SignedLog
from src.reporting.formatting import (
    format_cell,
    format_decimal,
    format_log,
    format_n,
    format_paper,
    format_percent,
    format_sci,
)


class TestScientific:

    def test_ten_significant_digits(self):
        assert format_sci(-0.009690363192) == "-9.690363192e-03"
        assert format_sci(-4.253401e17) == "-4.253401000e+17"
        assert format_sci(0.0) == "0.000000000e+00"

    def test_decimal_matches_float_layout(self):
        assert format_decimal(Decimal("-0.009690363192")) == "-9.690363192e-03"
        assert format_decimal(Decimal("3.059212e79")) == "3.059212000e+79"

    def test_log_form_past_double_range(self):
        value = SignedLog(1, math.log10(4.91354) + 369)
        assert format_log(value) == "4.913540000e+369"
        assert format_log(SignedLog(-1, 400.0)) == "-1.000000000e+400"


class TestPaperLayout:

    @pytest.mark.parametrize("value, expected", [
        (Decimal("0.000466343561"), "0.0004663435610"),
        (126.8236026, "126.8236026"),
        (-4.253401e17, "-4.253401.10^{17}"),
        (Decimal("-0.00079e29"), "-7.900000.10^{25}"),
    ])
    def test_values(self, value, expected):
        assert format_paper(value) == expected

    def test_signed_log(self):
        assert format_paper(SignedLog(1, math.log10(4.91354) + 369)) == "4.913540.10^{369}"


class TestCells:

    def test_index(self):
        assert format_n(137.0) == "137"
        assert format_n(137.017) == "137.017"

    def test_percent(self):
        assert format_percent(-0.5641) == "-56.41"

    def test_cell_types(self):
        assert format_cell(None) is None
        assert format_cell(True) == "true"
        assert format_cell(3) == "3"
        assert format_cell("m_term") == "m_term"
        assert format_cell(Decimal("0.5")) == "5.000000000e-01"
        assert format_cell(0.5, paper=True) == "0.5000000000"
