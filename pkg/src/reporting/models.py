"""
Data models for emitted records
Clean, typed dataclasses for everything the CLI prints
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

from src.numerics.models import StieltjesEstimate


@dataclass
class OutputRecord:
    """
    One computed value. Exactly one of `value` or the (sign, log10_magnitude)
    pair is populated: the pair only when the value leaves the double range.
    """
    n: float
    method: str
    M: int
    value: Optional[float] = None
    sign: Optional[int] = None
    log10_magnitude: Optional[float] = None
    relative_error_vs_reference: Optional[float] = None
    runtime_ms: Optional[float] = None

    def __post_init__(self):
        has_value = self.value is not None
        has_pair = self.sign is not None and self.log10_magnitude is not None
        if has_value == has_pair:
            raise ValueError("OutputRecord needs either a value or a (sign, log10_magnitude) pair")

    @classmethod
    def from_estimate(
        cls,
        estimate: StieltjesEstimate,
        relative_error: Optional[float] = None,
        runtime_ms: Optional[float] = None,
    ) -> "OutputRecord":
        if estimate.overflowed:
            return cls(
                n=estimate.n, method=estimate.method.value, M=estimate.terms,
                sign=estimate.sign, log10_magnitude=estimate.log10_magnitude,
                relative_error_vs_reference=relative_error, runtime_ms=runtime_ms,
            )
        return cls(
            n=estimate.n, method=estimate.method.value, M=estimate.terms,
            value=estimate.value,
            relative_error_vs_reference=relative_error, runtime_ms=runtime_ms,
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class CheckRecord:
    """Residual of one identity check"""
    check: str
    argument: str
    residual: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.threshold

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['passed'] = self.passed
        return data
