"""
Data models for the Stieltjes numerics
Typed dataclasses shared by the kernels, the oracle, the asymptotics and the reference layer
"""

import cmath
import math
from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum
from typing import Dict, NamedTuple, Optional, Union

from src.core.errors import ConfigurationError


class Regime(str, Enum):
    """Evaluation regime of a kernel"""
    SERIES = "series"
    CLOSED_FORM = "closed_form"
    ASYMPTOTIC = "asymptotic"


class Method(str, Enum):
    """How an estimate of gamma_n was produced"""
    ORACLE = "oracle"
    ONE_TERM = "one_term"
    M_TERM = "m_term"
    LEADING_ORDER = "leading_order"
    KNESSL_COFFEY = "knessl_coffey"
    REFERENCE = "reference"


class ReferenceSource(str, Enum):
    """Provenance of a reference value"""
    PAPER_TABLE1 = "paper_table1"
    PAPER_TABLE2 = "paper_table2"
    EXTERNAL_HIGHPREC = "external_highprec"


class SignedLog(NamedTuple):
    """A real number stored as (sign, log10 |x|); survives beyond the double range."""
    sign: int
    log10_magnitude: float

    @classmethod
    def from_value(cls, value: Union[float, int, Decimal, "SignedLog", "StieltjesEstimate"]) -> "SignedLog":
        if isinstance(value, SignedLog):
            return value
        if isinstance(value, StieltjesEstimate):
            return cls(value.sign, value.log10_magnitude)
        if isinstance(value, Decimal):
            if value.is_zero():
                return cls(0, -math.inf)
            return cls(-1 if value.is_signed() else 1, float(value.copy_abs().log10()))
        x = float(value)
        if x == 0.0:
            return cls(0, -math.inf)
        if math.isinf(x) or math.isnan(x):
            raise ValueError(f"cannot take the magnitude of {x!r}")
        return cls(1 if x > 0 else -1, math.log10(abs(x)))

    def to_float(self) -> float:
        """Value as a double; +-inf when outside the double range."""
        if self.sign == 0:
            return 0.0
        if self.log10_magnitude > 308.25:
            return math.copysign(math.inf, self.sign)
        return self.sign * 10.0 ** self.log10_magnitude


@dataclass(frozen=True)
class WResult:
    """Principal-branch Lambert W value with its solve diagnostics"""
    w: complex
    iterations: int
    residual: float


@dataclass(frozen=True)
class KernelEval:
    """Kernel value and the regime that produced it"""
    value: float
    regime: Regime


@dataclass(frozen=True)
class QuadratureConfig:
    """
    Tolerances and truncation settings of the integral oracle.

    Frozen so that it can key the memoised mu_n cache.
    """
    abs_tol: float = 1e-80
    rel_tol: float = 1e-20
    max_depth: int = 40
    u_min: float = -60.0
    u_max: float = 4.0
    guard_digits: int = 30
    panel_width: float = 4.0
    n_max: int = 40
    k_tail: int = 64
    tail_tol: float = 1e-12
    kc_rel_tol: float = 1e-10

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ConfigurationError("abs_tol must be positive")
        if not self.rel_tol > 0:
            raise ConfigurationError("rel_tol must be positive")
        if self.max_depth < 10:
            raise ConfigurationError("max_depth must be at least 10")
        if not self.u_min < self.u_max:
            raise ConfigurationError("u_min must be below u_max")
        if self.guard_digits < 10:
            raise ConfigurationError("guard_digits must be at least 10")
        if not self.panel_width > 0:
            raise ConfigurationError("panel_width must be positive")
        if self.n_max < 2:
            raise ConfigurationError("n_max must be at least 2")
        if self.k_tail < 1:
            raise ConfigurationError("k_tail must be at least 1")
        if not 0 < self.tail_tol < 1:
            raise ConfigurationError("tail_tol must lie in (0, 1)")
        if not 0 < self.kc_rel_tol < 1:
            raise ConfigurationError("kc_rel_tol must lie in (0, 1)")


@dataclass(frozen=True)
class MuCoefficient:
    """Oracle value of the Taylor coefficient mu_n of s(s-1)zeta(s) at s = 1"""
    n: int
    value: float
    error_estimate: float
    working_digits: int


@dataclass(frozen=True)
class SaddleContext:
    """Saddle point z0 of the exponent at effective index n_eff"""
    n_eff: float
    a: complex
    w: complex
    z0: complex
    f_at_z0: complex
    fpp_at_z0: complex
    lambert_iterations: int = 0

    @property
    def residual(self) -> float:
        """|z0 (log(n_eff z0 / 2 pi) + i pi/2) - 1|"""
        inner = complex(math.log(self.n_eff / (2 * math.pi)), math.pi / 2)
        return abs(self.z0 * (cmath.log(self.z0) + inner) - 1)


@dataclass
class StieltjesEstimate:
    """An approximation of gamma_n with the method that produced it"""
    n: float
    value: float
    method: Method
    terms: int = 1
    sign: int = 0
    log10_magnitude: float = -math.inf
    diagnostics: Dict[str, float] = field(default_factory=dict)

    @property
    def overflowed(self) -> bool:
        return math.isinf(self.value)

    @property
    def signed_log(self) -> SignedLog:
        return SignedLog(self.sign, self.log10_magnitude)


@dataclass(frozen=True)
class ReferenceRow:
    """One row of a reference table; numbers kept as verbatim decimal strings"""
    n: int
    gamma_exact: str
    source: ReferenceSource
    paper_m3: Optional[str] = None
    paper_one_term: Optional[str] = None
    paper_kc: Optional[str] = None
    gamma_corrected: Optional[str] = None
    kc_corrected: Optional[str] = None
    note: Optional[str] = None

    @property
    def exact(self) -> Decimal:
        """Value used for error metrics (the corrected one when an erratum exists)."""
        return Decimal(self.gamma_corrected or self.gamma_exact)

    def paper_value(self, method: Method) -> Optional[Decimal]:
        text = {
            Method.M_TERM: self.paper_m3,
            Method.ONE_TERM: self.paper_one_term,
            Method.KNESSL_COFFEY: self.kc_corrected or self.paper_kc,
        }.get(method)
        return Decimal(text) if text else None

    def as_estimate(self) -> StieltjesEstimate:
        """The reference value itself, shaped like a computed estimate."""
        signed = SignedLog.from_value(self.exact)
        return StieltjesEstimate(
            n=self.n,
            value=signed.to_float(),
            method=Method.REFERENCE,
            sign=signed.sign,
            log10_magnitude=signed.log10_magnitude,
        )


@dataclass(frozen=True)
class ErrorReport:
    """Relative error of an estimate against a reference value"""
    n: float
    method: Method
    approx: SignedLog
    exact: SignedLog
    relative_error: float
    sign_correct: bool

    @property
    def relative_error_percent(self) -> float:
        return 100.0 * self.relative_error
