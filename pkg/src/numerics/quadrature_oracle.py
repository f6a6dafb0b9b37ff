"""
Integral oracle for the Taylor coefficients mu_n and the Stieltjes constants

    s(s-1) zeta(s) = sum_n mu_n (s-1)^n
    mu_n = (2/n!) int_0^inf mu(t) Re{(a - log t)^n} dt,   a = log 2pi + i pi/2
    gamma_n = n! (-1)^n [mu_{n+2} - mu_{n+3} + ...]

The integrand is O(1) while mu_n shrinks like gamma_{n-2}/(n-2)!, so every
integral runs in mpmath at a working precision that covers the cancellation.
Integration is over u = log t with explicit tail bounds and globally adaptive
bisection of Gauss-Legendre panels.
"""

import functools
import heapq
import logging
import math
from typing import Callable, List, Tuple

import mpmath as mp

from src.core.errors import AccuracyError, ConvergenceError, DomainError, PoleError, RangeError
from src.numerics.kernels import mu_mp, psi_mp
from src.numerics.models import Method, MuCoefficient, QuadratureConfig, StieltjesEstimate
from src.numerics.special_functions import complex_gamma, hurwitz_zeta, real_gamma, zeta_oracle

logger = logging.getLogger(__name__)

A_CONST = complex(math.log(2 * math.pi), math.pi / 2)
LN10 = math.log(10.0)

# mu(t) <= MU_RIGHT_CONST * t * e^-t for t >= 2
MU_RIGHT_CONST = 1.55


def working_digits(n: int, cfg: QuadratureConfig) -> int:
    """Decimal digits needed for mu_n: guard digits plus the digits lost to cancellation."""
    lost = math.lgamma(max(n, 1) + 1) / LN10
    digits = cfg.guard_digits + math.ceil(lost) + 5
    return 10 * math.ceil(digits / 10)


def _mp_a():
    return mp.mpc(mp.log(2 * mp.pi), mp.pi / 2)


# ==================== Truncation bounds ====================

def _extend_left(start: float, log_bound: Callable[[float], float], log_target: float) -> float:
    u = start
    while log_bound(u) > log_target:
        u -= 5.0
    return u


def _extend_right(start: float, log_bound: Callable[[float], float], log_target: float) -> float:
    u = start
    while log_bound(u) > log_target:
        u += 0.25
    return u


def _mu_n_bounds(n: int, cfg: QuadratureConfig, digits: int) -> Tuple[float, float]:
    """Log-domain window outside of which the mu_n integrand contributes below 10^-digits."""
    a_abs = abs(A_CONST)
    log_target = -digits * LN10
    log_norm = math.log(2.0) - math.lgamma(n + 1)

    def left(u: float) -> float:
        # mu <= 1/6; int_{-inf}^U e^u (|a|+|u|)^n du with the ratio bound
        x = a_abs + abs(u)
        if x < 2 * n + 1:
            return math.inf
        return log_norm + math.log(1 / 6) + u + n * math.log(x) - math.log(1 - n / x)

    def right(u: float) -> float:
        t = math.exp(u)
        if t < 2 * n + 4:
            return math.inf
        return (log_norm + math.log(2 * MU_RIGHT_CONST) + math.log(t + 1) - t
                + n * math.log(a_abs + u))

    u_lo = _extend_left(min(cfg.u_min, -(2 * n + 1 + a_abs)), left, log_target)
    u_hi = _extend_right(max(cfg.u_max, math.log(4 * (n + 20))), right, log_target)
    return u_lo, u_hi


# ==================== Adaptive driver ====================

def _panel(f, lo, hi):
    value, error = mp.quad(f, [lo, hi], method="gauss-legendre", error=True)
    return value, abs(error)


def adaptive_integrate(f, lo: float, hi: float, cfg: QuadratureConfig) -> Tuple[mp.mpf, mp.mpf]:
    """
    Globally adaptive bisection over [lo, hi] at the current mpmath precision.

    The panel with the largest error estimate is split until the summed
    estimate drops below max(abs_tol, rel_tol |I|).

    Returns:
        (integral, error_estimate)

    Raises:
        AccuracyError: a panel reached max_depth without meeting the tolerance
    """
    count = max(1, math.ceil((hi - lo) / cfg.panel_width))
    edges = [mp.mpf(lo) + (mp.mpf(hi) - mp.mpf(lo)) * i / count for i in range(count + 1)]

    heap: List[tuple] = []
    order = 0
    for left, right in zip(edges[:-1], edges[1:]):
        value, error = _panel(f, left, right)
        heapq.heappush(heap, (-float(error), order, left, right, value, error, 0))
        order += 1

    while True:
        total = mp.fsum(item[4] for item in heap)
        error_total = mp.fsum(item[5] for item in heap)
        tolerance = max(mp.mpf(cfg.abs_tol), cfg.rel_tol * abs(total))
        if error_total <= tolerance:
            return total, error_total

        _, _, left, right, value, error, depth = heapq.heappop(heap)
        if depth >= cfg.max_depth:
            raise AccuracyError(
                f"panel [{float(left):.6g}, {float(right):.6g}] hit max_depth={cfg.max_depth}",
                value=float(total), error_estimate=float(error_total),
            )
        middle = (left + right) / 2
        for a, b in ((left, middle), (middle, right)):
            sub_value, sub_error = _panel(f, a, b)
            heapq.heappush(heap, (-float(sub_error), order, a, b, sub_value, sub_error, depth + 1))
            order += 1


# ==================== mu_n and I(n) ====================

def _check_index(n: int, cfg: QuadratureConfig):
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n}")
    if n > cfg.n_max:
        raise RangeError(f"n={n} exceeds the oracle limit n_max={cfg.n_max}")


@functools.lru_cache(maxsize=None)
def _mu_n_mp(n: int, cfg: QuadratureConfig) -> Tuple[mp.mpf, mp.mpf, int]:
    digits = working_digits(n, cfg)
    u_lo, u_hi = _mu_n_bounds(n, cfg, digits)
    with mp.workdps(digits):
        a = _mp_a()
        scale = 2 / mp.factorial(n)

        def integrand(u):
            t = mp.exp(u)
            return mu_mp(t) * t * mp.re((a - u) ** n)

        value, error = adaptive_integrate(integrand, u_lo, u_hi, cfg)
        value, error = +(scale * value), +(scale * error)
    logger.debug(f"[ORACLE] mu_{n}: u in [{u_lo:.1f}, {u_hi:.2f}], {digits} digits, "
                 f"error {mp.nstr(error, 3)}")
    return value, error, digits


def mu_n(n: int, cfg: QuadratureConfig) -> MuCoefficient:
    """
    Oracle value of mu_n; memoised per (n, cfg).

    Raises:
        RangeError: n > cfg.n_max
        AccuracyError: quadrature tolerance not met
    """
    _check_index(n, cfg)
    value, error, digits = _mu_n_mp(int(n), cfg)
    return MuCoefficient(n=int(n), value=float(value), error_estimate=float(error),
                         working_digits=digits)


def I_n(n: int, cfg: QuadratureConfig) -> float:
    """2 Re int_0^inf mu(t) (log t - a)^n dt, equal to (-1)^n n! mu_n."""
    _check_index(n, cfg)
    n = int(n)
    digits = working_digits(n, cfg)
    u_lo, u_hi = _mu_n_bounds(n, cfg, digits)
    with mp.workdps(digits):
        a = _mp_a()

        def integrand(u):
            t = mp.exp(u)
            return mu_mp(t) * t * mp.re((u - a) ** n)

        value, _ = adaptive_integrate(integrand, u_lo, u_hi, cfg)
        return float(2 * value)


# ==================== gamma_n ====================

def gamma_oracle(n: int, cfg: QuadratureConfig) -> StieltjesEstimate:
    """
    gamma_n from the alternating tail of oracle mu_k values.

    The partial sums telescope, so the truncation error is the size of the
    next term; summation stops once two consecutive terms fall below
    tail_tol relative to the partial sum.

    Raises:
        RangeError: n + 2 > cfg.n_max
        ConvergenceError: stopping rule unmet within k_tail terms or n_max
    """
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n}")
    n = int(n)
    if n + 2 > cfg.n_max:
        raise RangeError(f"gamma_{n} needs mu_{n + 2} beyond n_max={cfg.n_max}")

    partial = mp.mpf(0)
    error_sum = mp.mpf(0)
    partial_sums: List[float] = []
    quiet_terms = 0
    digits = 0
    last_term = mp.mpf(0)
    used = 0
    for j in range(2, cfg.k_tail + 2):
        k = n + j
        if k > cfg.n_max:
            raise ConvergenceError(
                f"gamma_{n}: tail needs mu_{k} beyond n_max={cfg.n_max}",
                partial_sums=partial_sums,
            )
        value, error, k_digits = _mu_n_mp(k, cfg)
        digits = max(digits, k_digits)
        with mp.workdps(digits):
            last_term = value if j % 2 == 0 else -value
            partial += last_term
            error_sum += error
        used = j - 1
        partial_sums.append(float(partial))
        quiet_terms = quiet_terms + 1 if abs(last_term) <= cfg.tail_tol * abs(partial) else 0
        if quiet_terms >= 2:
            break
    else:
        raise ConvergenceError(
            f"gamma_{n}: stopping rule not met within k_tail={cfg.k_tail} terms",
            partial_sums=partial_sums,
        )

    with mp.workdps(digits):
        factor = mp.factorial(n) * (-1) ** n
        value = factor * partial
        error_estimate = abs(factor) * (error_sum + abs(last_term))
    value_float = float(value)
    return StieltjesEstimate(
        n=n,
        value=value_float,
        method=Method.ORACLE,
        terms=used,
        sign=int(mp.sign(value)),
        log10_magnitude=float(mp.log10(abs(value))) if value else -math.inf,
        diagnostics={
            "tail_terms": float(used),
            "last_term": float(abs(factor) * abs(last_term)),
            "error_estimate": float(error_estimate),
            "working_digits": float(digits),
        },
    )


def gamma_finite_sum(n: int, cfg: QuadratureConfig) -> float:
    """gamma_n = -n! sum_{k=0}^{n+1} (-1)^k mu_k."""
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n}")
    n = int(n)
    if n + 1 > cfg.n_max:
        raise RangeError(f"gamma_{n} needs mu_{n + 1} beyond n_max={cfg.n_max}")
    values = [_mu_n_mp(k, cfg) for k in range(n + 2)]
    digits = max(item[2] for item in values)
    with mp.workdps(digits):
        total = mp.fsum((-1) ** k * item[0] for k, item in enumerate(values))
        return float(-mp.factorial(n) * total)


def alternating_mu_sum(K: int, cfg: QuadratureConfig) -> float:
    """sum_{k=0}^{K} (-1)^k mu_k; tends to s(s-1)zeta(s) at s = 0, which is 0."""
    _check_index(K, cfg)
    values = [_mu_n_mp(k, cfg) for k in range(int(K) + 1)]
    digits = max(item[2] for item in values)
    with mp.workdps(digits):
        return float(mp.fsum((-1) ** k * item[0] for k, item in enumerate(values)))


def kernel_mass(cfg: QuadratureConfig) -> float:
    """int_0^inf mu(t) dt, which equals phi(0) = 1/2."""
    return mu_n(0, cfg).value / 2


# ==================== Identity checks ====================

def verify_integral_identity(s: complex, cfg: QuadratureConfig) -> float:
    """
    Residual of s(s-1) zeta(s) Gamma(s) = int_0^inf mu(t) t^s dt.

    The left side is formed as (s-1) zeta(s) Gamma(s+1), regular at s = 0.

    Returns:
        |LHS - RHS| / (1 + |LHS|)
    """
    s = complex(s)
    if s == 1:
        raise PoleError("the identity is stated for s != 1")
    sigma = s.real
    if sigma <= -1:
        raise DomainError(f"the identity requires Re(s) > -1, got {s}")

    digits = 10 * math.ceil((cfg.guard_digits + 10) / 10)
    log_target = -digits * LN10
    exponent = sigma + 1

    def left(u: float) -> float:
        return u * exponent - math.log(6 * exponent)

    def right(u: float) -> float:
        t = math.exp(u)
        if t < 2 * exponent + 4:
            return math.inf
        return math.log(2 * MU_RIGHT_CONST) + exponent * u - t

    u_lo = _extend_left(cfg.u_min, left, log_target)
    u_hi = _extend_right(cfg.u_max, right, log_target)

    with mp.workdps(digits):
        s_mp = mp.mpc(s.real, s.imag)

        def integrand(u):
            return mu_mp(mp.exp(u)) * mp.exp((s_mp + 1) * u)

        rhs, _ = adaptive_integrate(integrand, u_lo, u_hi, cfg)
        rhs = complex(rhs)

    if s.imag == 0:
        gamma_factor = complex(real_gamma(s.real + 1))
    else:
        gamma_factor = complex_gamma(s + 1)
    lhs = (s - 1) * zeta_oracle(s) * gamma_factor
    residual = abs(lhs - rhs) / (1 + abs(lhs))
    logger.debug(f"[ORACLE] integral identity at s={s}: residual {residual:.3e}")
    return residual


def verify_hurwitz_identity(s: float, a: float, cfg: QuadratureConfig) -> float:
    """
    Residual of (s-1) zeta(s, a) = (1/Gamma(s)) int_0^inf psi(t; a) e^{-(a-1)t} t^{s-1} dt.

    Returns:
        |LHS - RHS| / (1 + |LHS|)
    """
    if s == 1:
        raise PoleError("the identity is stated for s != 1")
    if not s > 0:
        raise DomainError(f"the Hurwitz identity requires s > 0, got {s}")
    if not 0 < a <= 1:
        raise DomainError(f"the Hurwitz identity requires 0 < a <= 1, got {a}")

    digits = 10 * math.ceil((cfg.guard_digits + 10) / 10)
    log_target = -digits * LN10

    def left(u: float) -> float:
        return s * u - math.log(s)

    def right(u: float) -> float:
        t = math.exp(u)
        if t < 2 * (s + 1) / a + 4:
            return math.inf
        return math.log(8 / a) + math.log(t + 1) + s * u - a * t

    u_lo = _extend_left(cfg.u_min, left, log_target)
    u_hi = _extend_right(cfg.u_max, right, log_target)

    with mp.workdps(digits):
        s_mp = mp.mpf(s)
        shift = 1 - mp.mpf(a)

        def integrand(u):
            t = mp.exp(u)
            return psi_mp(t, a) * mp.exp(shift * t + s_mp * u)

        integral, _ = adaptive_integrate(integrand, u_lo, u_hi, cfg)
        rhs = float(integral / mp.gamma(s_mp))

    lhs = ((s - 1) * hurwitz_zeta(s, a)).real
    residual = abs(lhs - rhs) / (1 + abs(lhs))
    logger.debug(f"[ORACLE] Hurwitz identity at s={s}, a={a}: residual {residual:.3e}")
    return residual
