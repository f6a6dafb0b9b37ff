import math

import pytest

from src.numerics.models import Method, StieltjesEstimate
from src.reporting.models import CheckRecord, OutputRecord


def test_finite_estimate_carries_value():
    estimate = StieltjesEstimate(n=5, value=0.00079, method=Method.M_TERM, terms=3,
                                 sign=1, log10_magnitude=math.log10(0.00079))
    record = OutputRecord.from_estimate(estimate, relative_error=-0.004)
    assert record.value == 0.00079
    assert record.sign is None and record.log10_magnitude is None
    assert record.to_dict()["method"] == "m_term"


def test_overflow_carries_log_pair():
    estimate = StieltjesEstimate(n=800, value=math.inf, method=Method.M_TERM, terms=3,
                                 sign=1, log10_magnitude=369.69)
    record = OutputRecord.from_estimate(estimate)
    assert record.value is None
    assert (record.sign, record.log10_magnitude) == (1, 369.69)


def test_exactly_one_representation():
    with pytest.raises(ValueError):
        OutputRecord(n=2, method="m_term", M=3)
    with pytest.raises(ValueError):
        OutputRecord(n=2, method="m_term", M=3, value=1.0, sign=1, log10_magnitude=0.0)


def test_check_record():
    assert CheckRecord("kernel_mass", "mu", 1e-12, 1e-10).to_dict()["passed"] is True
    assert not CheckRecord("kernel_mass", "mu", 1e-9, 1e-10).passed
