"""
Deterministic number formatting
Ten significant digits in scientific notation by default; the published-table layout
(fixed notation below 10^7, m.mmmmmm.10^{e} above) behind --paper-format.
"""

import math
from decimal import Decimal
from typing import Optional, Union

from src.numerics.models import SignedLog

Cell = Union[None, bool, int, float, str, Decimal, SignedLog]

SIGNIFICANT_DIGITS = 10
PAPER_FIXED_LIMIT = 7


def format_sci(x: float) -> str:
    """x with ten significant digits, e.g. -9.690363192e-03."""
    if x == 0:
        return "0.000000000e+00"
    return f"{x:.{SIGNIFICANT_DIGITS - 1}e}"


def _split(log10_magnitude: float, digits: int):
    exponent = math.floor(log10_magnitude)
    mantissa = f"{10.0 ** (log10_magnitude - exponent):.{digits}f}"
    if mantissa.startswith("10"):
        exponent += 1
        mantissa = f"{10.0 ** (log10_magnitude - exponent):.{digits}f}"
    return mantissa, exponent


def format_log(value: SignedLog) -> str:
    """Scientific notation built from a log10 magnitude; no double range limit."""
    if value.sign == 0:
        return format_sci(0.0)
    mantissa, exponent = _split(value.log10_magnitude, SIGNIFICANT_DIGITS - 1)
    prefix = "-" if value.sign < 0 else ""
    return f"{prefix}{mantissa}e{exponent:+03d}"


def format_decimal(value: Decimal) -> str:
    """Same layout as format_sci; Decimal prints e-3 where floats print e-03."""
    if value.is_zero():
        return format_sci(0.0)
    mantissa, exponent = format(value, f".{SIGNIFICANT_DIGITS - 1}e").split("e")
    return f"{mantissa}e{int(exponent):+03d}"


def format_paper(value: Union[float, Decimal, SignedLog]) -> str:
    """Fixed notation for |x| < 10^7, otherwise m.mmmmmm.10^{e}."""
    signed = SignedLog.from_value(value)
    if signed.sign == 0:
        return "0"
    if signed.log10_magnitude < PAPER_FIXED_LIMIT:
        text = format_decimal(value) if isinstance(value, Decimal) else format_sci(signed.to_float())
        return format(Decimal(text), "f")
    mantissa, exponent = _split(signed.log10_magnitude, 6)
    prefix = "-" if signed.sign < 0 else ""
    return f"{prefix}{mantissa}.10^{{{exponent}}}"


def format_n(n: float) -> str:
    """Index as printed: integers without a decimal point."""
    n = float(n)
    if n.is_integer():
        return str(int(n))
    return f"{n:.{SIGNIFICANT_DIGITS}g}"


def format_percent(fraction: float) -> str:
    return f"{100.0 * fraction:.2f}"


def format_cell(value: Cell, paper: bool = False) -> Optional[str]:
    """String form of one table cell; None stays None (blank in CSV, null in JSON)."""
    if value is None:
        return None
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    if paper:
        return format_paper(value)
    if isinstance(value, Decimal):
        return format_decimal(value)
    if isinstance(value, SignedLog):
        return format_log(value)
    return format_sci(value)
