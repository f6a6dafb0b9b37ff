"""
Kernel functions of the integral representation
phi(t), mu(t) = -phi'(t), g(t) = e^t mu(t) and the Hurwitz kernel psi(t; a).

Each kernel is evaluated in one of three regimes:
    t < 0.5        Bernoulli series through B_20
    0.5 <= t <= 35 closed form in q = e^-t
    t > 35         closed form with the O(q^2) corrections dropped

The *_mp twins evaluate the same kernels at the current mpmath precision and
are used by the quadrature oracle.
"""

import math
from typing import Tuple

import mpmath as mp
import numpy as np
from numpy.polynomial import polynomial as P

from src.core.errors import DomainError
from src.numerics.models import KernelEval, Regime
from src.numerics.special_functions import BERNOULLI

SERIES_CUTOFF = 0.5
ASYMPTOTIC_CUTOFF = 35.0
SERIES_ORDER = 20

_B = [float(b) for b in BERNOULLI[:SERIES_ORDER + 1]]

# Power-series coefficients in t
_MU_SERIES = np.array([_B[k] / math.factorial(k - 2) for k in range(2, SERIES_ORDER + 1)])
_PHI_SERIES = np.array([-_B[k] / math.factorial(k - 1) for k in range(1, SERIES_ORDER + 1)])
_BETA_SERIES = np.array([_B[k] / math.factorial(k) for k in range(0, SERIES_ORDER + 1)])


def _regime(t: float) -> Regime:
    if t < 0:
        raise DomainError(f"kernels are defined for t >= 0, got {t}")
    if t < SERIES_CUTOFF:
        return Regime.SERIES
    if t <= ASYMPTOTIC_CUTOFF:
        return Regime.CLOSED_FORM
    return Regime.ASYMPTOTIC


def _q_pair(t: float) -> Tuple[float, float]:
    """(e^-t, 1 - e^-t) without cancellation."""
    return math.exp(-t), -math.expm1(-t)


def phi(t: float) -> KernelEval:
    """phi(t) = t e^t/(e^t - 1)^2 - 1/(e^t - 1); phi(0) = 1/2."""
    regime = _regime(t)
    if regime is Regime.SERIES:
        return KernelEval(float(P.polyval(t, _PHI_SERIES)), regime)
    q, one_minus_q = _q_pair(t)
    if regime is Regime.CLOSED_FORM:
        return KernelEval(q * (t - 1.0 + q) / one_minus_q ** 2, regime)
    return KernelEval(q * (t - 1.0 + q) * (1.0 + 2.0 * q), regime)


def mu(t: float) -> KernelEval:
    """mu(t) = -phi'(t); mu(0) = 1/6 and mu(t) ~ (t - 2) e^-t."""
    regime = _regime(t)
    if regime is Regime.SERIES:
        return KernelEval(float(P.polyval(t, _MU_SERIES)), regime)
    q, one_minus_q = _q_pair(t)
    numerator = t - 2.0 + (t + 2.0) * q
    if regime is Regime.CLOSED_FORM:
        return KernelEval(q * numerator / one_minus_q ** 3, regime)
    return KernelEval(q * numerator * (1.0 + 3.0 * q), regime)


def g(t: float) -> KernelEval:
    """g(t) = e^t mu(t); tends to t - 2."""
    regime = _regime(t)
    if regime is Regime.SERIES:
        return KernelEval(math.exp(t) * float(P.polyval(t, _MU_SERIES)), regime)
    q, one_minus_q = _q_pair(t)
    numerator = t - 2.0 + (t + 2.0) * q
    if regime is Regime.CLOSED_FORM:
        return KernelEval(numerator / one_minus_q ** 3, regime)
    return KernelEval(numerator * (1.0 + 3.0 * q), regime)


def _beta(t: float, regime: Regime) -> float:
    """t/(e^t - 1)."""
    if regime is Regime.SERIES:
        return float(P.polyval(t, _BETA_SERIES))
    q, one_minus_q = _q_pair(t)
    if regime is Regime.CLOSED_FORM:
        return t * q / one_minus_q
    return t * q * (1.0 + q)


def psi(t: float, a: float) -> KernelEval:
    """Hurwitz kernel psi(t; a) = phi(t) + (a - 1) t/(e^t - 1), 0 < a <= 1."""
    if not 0 < a <= 1:
        raise DomainError(f"psi requires 0 < a <= 1, got {a}")
    base = phi(t)
    if a == 1:
        return base
    return KernelEval(base.value + (a - 1.0) * _beta(t, base.regime), base.regime)


def gaussian_g_model(t: float) -> float:
    """Piecewise model of g: (1/6) e^{-t^2/10} on [0, 1], t - 2 beyond. Diagnostic only."""
    if t < 0:
        raise DomainError(f"kernels are defined for t >= 0, got {t}")
    if t <= 1.0:
        return math.exp(-t * t / 10.0) / 6.0
    return t - 2.0


# ==================== Extended precision ====================

def _even_bernoulli_sum(t, shift: int):
    """Sum over even k >= 2 of B_k t^(k - shift)/(k - shift)! at working precision."""
    total = mp.mpf(0)
    k = 2
    while True:
        term = mp.bernoulli(k) * t ** (k - shift) / mp.factorial(k - shift)
        total += term
        if abs(term) <= mp.mp.eps * abs(total) or k > 4 * mp.mp.dps + 40:
            return total
        k += 2


def mu_mp(t):
    """mu(t) at the current mpmath precision."""
    t = mp.mpf(t)
    if t < SERIES_CUTOFF:
        return _even_bernoulli_sum(t, 2)
    with mp.extraprec(12):
        q = mp.exp(-t)
        one_minus_q = -mp.expm1(-t)
        value = q * (t - 2 + (t + 2) * q) / one_minus_q ** 3
    return +value


def phi_mp(t):
    """phi(t) at the current mpmath precision."""
    t = mp.mpf(t)
    if t < SERIES_CUTOFF:
        return mp.mpf(1) / 2 - _even_bernoulli_sum(t, 1)
    with mp.extraprec(12):
        q = mp.exp(-t)
        one_minus_q = -mp.expm1(-t)
        value = q * (t - 1 + q) / one_minus_q ** 2
    return +value


def beta_mp(t):
    """t/(e^t - 1) at the current mpmath precision."""
    t = mp.mpf(t)
    if t < SERIES_CUTOFF:
        return 1 - t / 2 + _even_bernoulli_sum(t, 0)
    return t / mp.expm1(t)


def psi_mp(t, a):
    """psi(t; a) at the current mpmath precision."""
    if not 0 < a <= 1:
        raise DomainError(f"psi requires 0 < a <= 1, got {a}")
    return phi_mp(t) + (mp.mpf(a) - 1) * beta_mp(t)
