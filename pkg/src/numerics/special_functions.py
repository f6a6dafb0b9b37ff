"""
Special functions on the principal branch
Complex logarithm and power, Lambert W (branch 0), real Gamma and
Euler-Maclaurin zeta / Hurwitz zeta.
"""

import cmath
import logging
import math
from fractions import Fraction
from typing import Union

import numpy as np
from scipy import special

from src.core.errors import ConvergenceError, DomainError, GammaOverflowError, PoleError
from src.numerics.models import WResult

logger = logging.getLogger(__name__)

Complex = complex
Number = Union[int, float, complex]

EXP_MINUS_ONE = math.exp(-1.0)

# B_0 .. B_30
BERNOULLI = (
    Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0),
    Fraction(-1, 30), Fraction(0), Fraction(1, 42), Fraction(0),
    Fraction(-1, 30), Fraction(0), Fraction(5, 66), Fraction(0),
    Fraction(-691, 2730), Fraction(0), Fraction(7, 6), Fraction(0),
    Fraction(-3617, 510), Fraction(0), Fraction(43867, 798), Fraction(0),
    Fraction(-174611, 330), Fraction(0), Fraction(854513, 138), Fraction(0),
    Fraction(-236364091, 2730), Fraction(0), Fraction(8553103, 6), Fraction(0),
    Fraction(-23749461029, 870), Fraction(0), Fraction(8615841276005, 14322),
)

EM_CUTOFF = 30
EM_CORRECTIONS = 15

W_MAX_ITER = 50
W_TOLERANCE = 1e-15
W_RESIDUAL_LIMIT = 1e-13
W_BRANCH_POINT_GUARD = 1e-12
W_NEAR_REAL = 1e-15


def principal_log(z: Number) -> complex:
    """Principal logarithm with Im in (-pi, pi]."""
    z = complex(z)
    if z == 0:
        raise DomainError("log(0) is undefined")
    w = cmath.log(z)
    # -0.0 imaginary part puts the negative real axis at -pi
    if w.imag == -math.pi:
        w = complex(w.real, math.pi)
    return w


def complex_pow(z: Number, p: Number) -> complex:
    """z**p = exp(p Log z) on the principal branch; 0**p = 0 for Re p > 0."""
    z = complex(z)
    p = complex(p)
    if z == 0:
        if p.real > 0:
            return 0j
        raise DomainError(f"0 raised to a power with Re <= 0 ({p})")
    return cmath.exp(p * principal_log(z))


# ==================== Lambert W ====================

def _branch_point_seed(z: complex, order: int) -> complex:
    p = cmath.sqrt(2.0 * (math.e * z + 1.0))
    if order == 1:
        return p - 1.0
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p ** 3


def _asymptotic_seed(z: complex) -> complex:
    log_z = principal_log(z)
    return log_z - principal_log(log_z)


def _seeds(z: complex):
    """Starting points in order of preference."""
    if abs(z + EXP_MINUS_ONE) <= 0.3:
        yield _branch_point_seed(z, order=3)
    elif abs(z) <= 0.3:
        yield z - z * z + 1.5 * z ** 3
    elif abs(z + EXP_MINUS_ONE) <= 1.5:
        yield _branch_point_seed(z, order=1)
    if abs(z) > 1.0:
        yield _asymptotic_seed(z)
    yield _branch_point_seed(z, order=1)


def _halley(z: complex, w: complex, max_iter: int, tol: float):
    for iteration in range(1, max_iter + 1):
        ew = cmath.exp(w)
        wewz = w * ew - z
        wp1 = w + 1.0
        if wp1 == 0:
            raise DomainError("Halley step hit the branch point w = -1")
        dw = wewz / (ew * wp1 - (w + 2.0) * wewz / (2.0 * wp1))
        w = w - dw
        if abs(dw) <= tol * (1.0 + abs(w)):
            return w, iteration
    return w, max_iter


def _on_principal_branch(z: complex, w: complex) -> bool:
    if abs(w.imag) >= math.pi:
        return False
    if abs(z.imag) <= W_NEAR_REAL * abs(z) and z.real >= -EXP_MINUS_ONE:
        # Im w is of the order of Im z here and may round to zero
        return w.real >= -1.0
    return w.imag != 0 and math.copysign(1.0, w.imag) == math.copysign(1.0, z.imag)


def lambert_w0(z: Number, max_iter: int = W_MAX_ITER, tol: float = W_TOLERANCE) -> WResult:
    """
    Principal branch of the Lambert W function.

    Halley iteration from a region-dependent seed; the result is checked for
    its residual |w e^w - z| / max(1, |z|) and for membership of branch 0.

    Raises:
        DomainError: z on the cut (-inf, -1/e) or at the branch point
        ConvergenceError: no seed reached the residual limit on branch 0
    """
    z = complex(z)
    if z == 0:
        return WResult(w=0j, iterations=0, residual=0.0)
    if abs(z + EXP_MINUS_ONE) < W_BRANCH_POINT_GUARD:
        raise DomainError("z is at the branch point -1/e")
    if z.imag == 0 and z.real < -EXP_MINUS_ONE:
        raise DomainError(f"z = {z.real} lies on the branch cut")

    best_residual = math.inf
    for seed in _seeds(z):
        w, iterations = _halley(z, seed, max_iter, tol)
        if z.imag == 0:
            w = complex(w.real, 0.0)
        residual = abs(w * cmath.exp(w) - z) / max(1.0, abs(z))
        best_residual = min(best_residual, residual)
        if residual <= W_RESIDUAL_LIMIT and _on_principal_branch(z, w):
            return WResult(w=w, iterations=iterations, residual=residual)
        logger.debug(f"[LAMBERT] seed {seed} gave w={w} residual={residual:.3e}; retrying")

    raise ConvergenceError(f"Lambert W did not converge for z={z}", residual=best_residual)


# ==================== Gamma ====================

def real_gamma(x: float) -> float:
    """
    Gamma(x) for real x > 0.

    Integers are exact through the factorial; above x ~ 171.62 the value no
    longer fits in a double and GammaOverflowError carries lgamma(x).
    """
    x = float(x)
    if math.isnan(x) or x <= 0:
        raise DomainError(f"real_gamma requires x > 0, got {x}")
    try:
        if x.is_integer():
            return float(math.factorial(int(x) - 1))
        return math.gamma(x)
    except OverflowError:
        raise GammaOverflowError(
            f"Gamma({x}) overflows the double range", sign=1, log_value=math.lgamma(x)
        ) from None


def complex_gamma(s: Number) -> complex:
    """Gamma(s) for complex s via the principal log-Gamma."""
    return complex(np.exp(special.loggamma(complex(s))))


# ==================== Zeta ====================

def hurwitz_zeta(s: Number, a: float = 1.0) -> complex:
    """
    Hurwitz zeta(s, a) by Euler-Maclaurin summation.

    Thirty direct terms followed by the integral, the half term and fifteen
    Bernoulli corrections.
    """
    s = complex(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if not a > 0:
        raise DomainError(f"Hurwitz zeta requires a > 0, got {a}")

    nodes = np.arange(EM_CUTOFF, dtype=float) + a
    head = complex(np.sum(np.exp(-s * np.log(nodes))))

    x = EM_CUTOFF + a
    x_pow = cmath.exp(-s * math.log(x))
    total = head + x * x_pow / (s - 1) + 0.5 * x_pow

    rising = s
    x_pow_odd = x_pow / x
    for j in range(1, EM_CORRECTIONS + 1):
        coefficient = float(BERNOULLI[2 * j]) / math.factorial(2 * j)
        total += coefficient * rising * x_pow_odd
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        x_pow_odd /= x * x
    return total


def zeta_oracle(s: Number) -> complex:
    """Riemann zeta(s), s != 1."""
    return hurwitz_zeta(s, 1.0)
