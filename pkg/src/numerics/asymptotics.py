"""
Saddle-point asymptotics of the Stieltjes constants
One-term, M-term and closed-form leading-order approximations built on the
saddle z0 = 1/W(i N / 2 pi), plus the Knessl-Coffey closed form and the integral behind it.

All magnitudes are carried as complex logarithms so that n up to 1e5 never
overflows; an estimate whose value leaves the double range reports +-inf and
keeps its (sign, log10 magnitude).
"""

import cmath
import logging
import math
import sys
from dataclasses import replace
from typing import Dict, List, NamedTuple, Optional, Tuple

import mpmath as mp
import numpy as np
from scipy import optimize

from src.core.errors import AccuracyError, ConfigurationError, ConvergenceError, DomainError
from src.numerics.models import Method, QuadratureConfig, SaddleContext, SignedLog, StieltjesEstimate
from src.numerics.quadrature_oracle import A_CONST, adaptive_integrate
from src.numerics.special_functions import lambert_w0, principal_log

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
LN10 = math.log(10.0)
LOG_DOUBLE_MAX = math.log(sys.float_info.max)

FORMS = ("listing", "theorem")
KC_PATHS = ("closed_form", "contour", "zeros")
KC_DEFAULT_PATH = "closed_form"
KC_ZEROS_MAX_N = 10
KC_PANEL_WIDTH = 0.5


class AsymptoticMagnitude(NamedTuple):
    """Magnitude estimate with its log10 so that tiny values survive underflow."""
    value: float
    log10_magnitude: float


# ==================== Saddle point ====================

def saddle_point(n_eff: float) -> SaddleContext:
    """
    Saddle z0 of the exponent for effective index n_eff.

    z0 = (2 pi / (n_eff i)) exp(W(n_eff i / 2 pi)) solves
    z0 (log(n_eff z0 / 2 pi) + i pi/2) = 1 and lies in the fourth quadrant.
    """
    if not n_eff >= 1:
        raise DomainError(f"saddle_point requires n_eff >= 1, got {n_eff}")
    w = lambert_w0(complex(0.0, n_eff / TWO_PI))
    z0 = -2j * math.pi * cmath.exp(w.w) / n_eff
    context = SaddleContext(
        n_eff=float(n_eff),
        a=A_CONST,
        w=w.w,
        z0=z0,
        f_at_z0=-z0 - principal_log(z0),
        fpp_at_z0=-1.0 - 1.0 / z0,
        lambert_iterations=w.iterations,
    )
    if not (z0.real > 0 and z0.imag < 0):
        raise ConvergenceError(f"saddle for n_eff={n_eff} left the fourth quadrant: {z0}",
                               residual=context.residual)
    logger.debug(f"[SADDLE] n_eff={n_eff}: z0={z0:.12g}, residual={context.residual:.2e}")
    return context


def saddle_asymptotic_form(n_eff: float) -> complex:
    """Leading-order form 1/log(n/2pi) e^{-i pi/(2 log n)} of the saddle."""
    if not n_eff > TWO_PI:
        raise DomainError(f"the asymptotic saddle form needs n_eff > 2 pi, got {n_eff}")
    return cmath.exp(-1j * math.pi / (2.0 * math.log(n_eff))) / math.log(n_eff / TWO_PI)


# ==================== Log-space terms ====================

def _log_factorial_ratio(n: float, k: int) -> float:
    """log(n!/(n+1+k)!) = -sum_{j=1}^{k+1} log(n + j)."""
    return -math.fsum(math.log(n + j) for j in range(1, k + 2))


def _term_log(n: float, k: int, context: SaddleContext, form: str) -> complex:
    big_n = n + 2 + k
    z0 = context.z0
    head = math.log(2.0) + _log_factorial_ratio(n, k) + principal_log(big_n * z0 - 1.0)
    if form == "listing":
        return (head
                + 0.5 * principal_log(-TWO_PI / (big_n * context.fpp_at_z0))
                + big_n * context.f_at_z0)
    return (head
            + 0.5 * math.log(TWO_PI / big_n)
            + (0.5 - big_n) * principal_log(z0)
            - big_n * z0
            - 0.5 * principal_log(1.0 + z0))


def _real_part(log_value: complex) -> float:
    if log_value.real > LOG_DOUBLE_MAX:
        return math.copysign(math.inf, math.cos(log_value.imag))
    return math.exp(log_value.real) * math.cos(log_value.imag)


def _sum_real_parts(logs: List[complex]) -> Tuple[float, int, float]:
    """Sum of Re e^{L} over logs, scaled by the largest envelope."""
    peak = max(value.real for value in logs)
    scaled = math.fsum(math.exp(value.real - peak) * math.cos(value.imag) for value in logs)
    if scaled == 0.0:
        return 0.0, 0, -math.inf
    sign = 1 if scaled > 0 else -1
    log_magnitude = peak + math.log(abs(scaled))
    signed = SignedLog(sign, log_magnitude / LN10)
    return signed.to_float(), sign, signed.log10_magnitude


def _saddle_sum(n: float, terms: int, shared_saddle: bool, form: str,
                method: Method) -> StieltjesEstimate:
    if form not in FORMS:
        raise ConfigurationError(f"form must be one of {FORMS}, got {form!r}")
    if shared_saddle:
        shared = saddle_point(n + 2)
        contexts = [shared] * terms
    else:
        contexts = [saddle_point(n + 2 + k) for k in range(terms)]

    logs = [_term_log(n, k, contexts[k], form) for k in range(terms)]
    value, sign, log10_magnitude = _sum_real_parts(logs)

    diagnostics: Dict[str, float] = {
        "saddle_residual": max(context.residual for context in contexts),
    }
    for k, log_value in enumerate(logs):
        diagnostics[f"term_{k}"] = _real_part(log_value)
        diagnostics[f"term_{k}_log10_envelope"] = log_value.real / LN10

    return StieltjesEstimate(
        n=n, value=value, method=method, terms=terms,
        sign=sign, log10_magnitude=log10_magnitude, diagnostics=diagnostics,
    )


# ==================== Approximations ====================

def gamma_one_term(n: float, form: str = "listing") -> StieltjesEstimate:
    """
    One-term saddle-point approximation of gamma_n.

    Accepts real n >= 2; the factorial ratio 1/(n+1) holds for real n as well.
    """
    if not n >= 2:
        raise DomainError(f"gamma_one_term requires n >= 2, got {n}")
    return _saddle_sum(float(n), 1, shared_saddle=False, form=form, method=Method.ONE_TERM)


def gamma_m_term(n: int, terms: int = 3, shared_saddle: bool = False,
                 form: str = "listing") -> StieltjesEstimate:
    """
    M-term saddle-point approximation of gamma_n.

    Args:
        n: integer index, n >= 2
        terms: number of tail terms M >= 1
        shared_saddle: use one saddle from n + 2 for every term instead of
            recomputing it from n + 2 + k
        form: "listing" (sqrt(-2pi/(N f'')) e^{N f}) or "theorem"
            (sqrt(2pi/N) z0^{1/2-N} e^{-N z0} / sqrt(1 + z0))
    """
    if terms < 1:
        raise ConfigurationError(f"the number of terms must be at least 1, got {terms}")
    if int(n) != n or n < 2:
        raise DomainError(f"gamma_m_term requires an integer n >= 2, got {n}")
    method = Method.ONE_TERM if terms == 1 else Method.M_TERM
    return _saddle_sum(float(int(n)), terms, shared_saddle=shared_saddle, form=form, method=method)


def gamma_leading_order(n: int) -> StieltjesEstimate:
    """
    Closed-form leading order of growth and oscillation of gamma_n.

    2 sqrt(2pi/(n+2)) exp((n+1/2) log log((n+2)/2pi) - (n+2)/log((n+2)/2pi))
    times cos((n+1/2) pi / (2 log(n+2))).
    """
    if int(n) != n or n < 5:
        raise DomainError(f"gamma_leading_order requires an integer n >= 5, got {n}")
    n = int(n)
    big_n = n + 2
    log_ratio = math.log(big_n / TWO_PI)
    log_envelope = (math.log(2.0) + 0.5 * math.log(TWO_PI / big_n)
                    + (n + 0.5) * math.log(log_ratio) - big_n / log_ratio)
    phase = (n + 0.5) * math.pi / (2.0 * math.log(big_n))
    value, sign, log10_magnitude = _sum_real_parts([complex(log_envelope, phase)])
    return StieltjesEstimate(
        n=n, value=value, method=Method.LEADING_ORDER, terms=1,
        sign=sign, log10_magnitude=log10_magnitude,
        diagnostics={"cos_factor": math.cos(phase), "log10_envelope": log_envelope / LN10},
    )


def mu_n_asymptotic_magnitude(n: int) -> AsymptoticMagnitude:
    """|mu_n| ~ n log n / e^{n log n}, in log space."""
    if n < 3:
        raise DomainError(f"mu_n_asymptotic_magnitude requires n >= 3, got {n}")
    log_value = math.log(n) + math.log(math.log(n)) - n * math.log(n)
    return AsymptoticMagnitude(value=math.exp(log_value), log10_magnitude=log_value / LN10)


# ==================== Knessl-Coffey comparison ====================

def _kc_saddle_angle(n: float) -> float:
    """v in (0, pi/2) with 2 pi e^{v tan v} = n cos v / v."""
    log_target = math.log(n / TWO_PI)

    def residual(v: float) -> float:
        return v * math.tan(v) - math.log(math.cos(v)) + math.log(v) - log_target

    try:
        return optimize.brentq(residual, 1e-300, math.pi / 2 - 1e-12, xtol=1e-15)
    except (ValueError, RuntimeError) as e:
        raise ConvergenceError(f"Knessl-Coffey saddle angle at n={n}: {e}") from e


def _kc_closed_form(n: float) -> StieltjesEstimate:
    v = _kc_saddle_angle(n)
    u = v * math.tan(v)
    r2 = u * u + v * v
    theta = math.atan2(v, u)
    growth = 0.5 * math.log(r2) - u / r2
    log_scale = (math.log(2.0 * math.sqrt(TWO_PI)) + 0.5 * math.log(r2)
                 - 0.25 * math.log((u + 1.0) ** 2 + v * v))
    frequency = theta + v / r2
    shift = theta - 0.5 * math.atan(v / (u + 1.0))

    log_envelope = log_scale - 0.5 * math.log(n) + n * growth
    phase = frequency * n + shift
    value, sign, log10_magnitude = _sum_real_parts([complex(log_envelope, phase)])
    return StieltjesEstimate(
        n=n, value=value, method=Method.KNESSL_COFFEY, terms=1,
        sign=sign, log10_magnitude=log10_magnitude,
        diagnostics={
            "u": u,
            "v": v,
            "cos_factor": math.cos(phase),
            "log10_envelope": log_envelope / LN10,
        },
    )


def _kc_horizontal_profile(n: float) -> Tuple[np.ndarray, np.ndarray]:
    """log |integrand| along t = x + i pi/2 on a fixed grid."""
    half_pi = math.pi / 2
    x = np.linspace(0.0, 12.0, 4801)
    profile = ((n - 1) * 0.5 * np.log(x ** 2 + half_pi ** 2) - x
               + 0.5 * np.log((n - x) ** 2 + half_pi ** 2) - TWO_PI * np.exp(x))
    return x, profile


def _kc_log_peak(n: float) -> float:
    """Largest log-magnitude of the rotated integrand on both contour legs."""
    _, horizontal = _kc_horizontal_profile(n)
    y = np.linspace(1e-6, math.pi / 2, 801)
    vertical = (n - 1) * np.log(y) + 0.5 * np.log(n ** 2 + y ** 2) - TWO_PI * np.sin(y)
    return float(max(horizontal.max(), vertical.max()))


def _kc_cutoff(n: float, log_floor: float) -> float:
    """First x past the peak where the horizontal leg drops below log_floor."""
    x, horizontal = _kc_horizontal_profile(n)
    peak_index = int(np.argmax(horizontal))
    below = np.nonzero(horizontal[peak_index:] < log_floor)[0]
    if below.size == 0:
        return float(x[-1])
    return float(x[peak_index + below[0]])


def _kc_digits(n: float, cfg: QuadratureConfig, integrand_log_peak: float) -> int:
    expected = gamma_one_term(n).log10_magnitude
    if not math.isfinite(expected):
        expected = 0.0
    lost = max(0.0, integrand_log_peak / LN10 - expected)
    return 10 * math.ceil((cfg.guard_digits + math.ceil(lost) + 5) / 10)


def _kc_contour(n: float, cfg: QuadratureConfig) -> Tuple[mp.mpf, mp.mpf, int]:
    peak = _kc_log_peak(n)
    digits = _kc_digits(n, cfg, peak)
    x_cut = _kc_cutoff(n, peak - (digits + 5) * LN10)
    quad_cfg = replace(cfg, panel_width=KC_PANEL_WIDTH, rel_tol=cfg.kc_rel_tol * 1e-3)
    power = int(n) - 1 if float(n).is_integer() else n - 1

    with mp.workdps(digits):
        n_mp = mp.mpf(n)
        two_pi = 2 * mp.pi
        half_pi = mp.pi / 2
        two_pi_i = mp.mpc(0, two_pi)

        def vertical(y):
            t = mp.mpc(0, y)
            return mp.exp(two_pi_i * mp.expj(y) - t) * t ** power * (n_mp - t) * mp.j

        def horizontal(x):
            t = mp.mpc(x, half_pi)
            return mp.exp(-two_pi * mp.exp(x) - t) * t ** power * (n_mp - t)

        v_value, v_error = adaptive_integrate(vertical, 0.0, math.pi / 2, quad_cfg)
        h_value, h_error = adaptive_integrate(horizontal, 0.0, x_cut, quad_cfg)
        value = -mp.im(v_value + h_value) / mp.pi
        error = (v_error + h_error) / mp.pi
    logger.debug(f"[KC] n={n}: contour to x={x_cut:.2f} at {digits} digits")
    return value, error, digits


def _kc_zeros(n: float, cfg: QuadratureConfig) -> Tuple[mp.mpf, mp.mpf, int]:
    if n > KC_ZEROS_MAX_N:
        raise DomainError(f"the zero-to-zero path is limited to n <= {KC_ZEROS_MAX_N}")
    expected = gamma_one_term(n).log10_magnitude
    lost = max(0.0, math.lgamma(n + 1) / LN10 - expected)
    digits = 10 * math.ceil((cfg.guard_digits + math.ceil(lost) + 5) / 10)

    def evaluate(dps: int):
        with mp.workdps(dps):
            n_mp = mp.mpf(n)
            two_pi = 2 * mp.pi

            def integrand(v):
                log_v = mp.log(v)
                return mp.sin(two_pi * v) * log_v ** (n_mp - 1) * (n_mp - log_v) / v ** 2

            return -mp.quadosc(integrand, [1, mp.inf], omega=two_pi) / mp.pi

    coarse = evaluate(digits)
    fine = evaluate(digits + 10)
    logger.debug(f"[KC] n={n}: zero-to-zero integration at {digits} digits")
    return fine, abs(fine - coarse), digits


def gamma_knessl_coffey(n: float, cfg: Optional[QuadratureConfig] = None,
                        path: str = KC_DEFAULT_PATH) -> StieltjesEstimate:
    """
    Knessl-Coffey approximation of gamma_n.

    path="closed_form" evaluates B n^{-1/2} e^{nA} cos(an + b), where
    u = v tan v and v in (0, pi/2) solves 2 pi e^u = n cos v / v.

    The other paths evaluate the integral it is derived from,
    -(1/pi) int_0^inf sin(2 pi e^t) t^{n-1} e^{-t} (n - t) dt.
    path="contour" writes it as -(1/pi) Im int e^{2 pi i e^t} ... dt and
    moves it to 0 -> i pi/2 -> i pi/2 + inf, where the oscillation turns
    into the decay e^{-2 pi e^x}. path="zeros" integrates the v = e^t form
    between consecutive zeros of sin(2 pi v) with series acceleration (n <= 10).

    Raises:
        ConvergenceError: no saddle angle found (closed_form)
        AccuracyError: integral error estimate above cfg.kc_rel_tol relative
    """
    if not n >= 2:
        raise DomainError(f"gamma_knessl_coffey requires n >= 2, got {n}")
    if path not in KC_PATHS:
        raise ConfigurationError(f"path must be one of {KC_PATHS}, got {path!r}")
    if path == "closed_form":
        return _kc_closed_form(float(n))

    cfg = cfg or QuadratureConfig()
    value, error, digits = _kc_contour(n, cfg) if path == "contour" else _kc_zeros(n, cfg)

    if error > cfg.kc_rel_tol * abs(value):
        raise AccuracyError(
            f"Knessl-Coffey integral at n={n}: error {mp.nstr(error, 3)} exceeds tolerance",
            value=float(value), error_estimate=float(error),
        )
    sign = int(mp.sign(value))
    log10_magnitude = float(mp.log10(abs(value))) if sign else -math.inf
    return StieltjesEstimate(
        n=n,
        value=SignedLog(sign, log10_magnitude).to_float(),
        method=Method.KNESSL_COFFEY,
        terms=1,
        sign=sign,
        log10_magnitude=log10_magnitude,
        diagnostics={
            "error_estimate_log10": float(mp.log10(error)) if error else -math.inf,
            "working_digits": float(digits),
        },
    )
