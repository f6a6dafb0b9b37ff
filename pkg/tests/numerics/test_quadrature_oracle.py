"""
Oracle tests. The high-precision integrals share one memoised cache through
the session-scoped `cfg` fixture.
"""

import math
from dataclasses import replace

import mpmath as mp
import pytest

from src.core.errors import AccuracyError, ConfigurationError, DomainError, PoleError, RangeError
from src.numerics.models import Method, QuadratureConfig
from src.numerics.quadrature_oracle import (
    I_n,
    adaptive_integrate,
    alternating_mu_sum,
    gamma_finite_sum,
    gamma_oracle,
    kernel_mass,
    mu_n,
    verify_hurwitz_identity,
    verify_integral_identity,
    working_digits,
)

EULER_GAMMA = 0.5772156649015329
GAMMA_1 = -0.0728158454836767


class TestConfig:

    def test_defaults_validate(self):
        assert QuadratureConfig().n_max == 40

    @pytest.mark.parametrize("field, value", [
        ("abs_tol", 0.0), ("rel_tol", -1.0), ("max_depth", 3), ("guard_digits", 5),
        ("n_max", 1), ("tail_tol", 1.5), ("panel_width", 0.0),
    ])
    def test_invalid_values(self, field, value):
        with pytest.raises(ConfigurationError):
            QuadratureConfig(**{field: value})

    def test_working_digits(self, cfg):
        assert working_digits(0, cfg) % 10 == 0
        assert working_digits(40, cfg) > working_digits(10, cfg) >= cfg.guard_digits


class TestAdaptiveIntegrate:

    def test_polynomial(self, cfg):
        with mp.workdps(30):
            value, error = adaptive_integrate(lambda x: x * x, 0.0, 1.0, cfg)
            assert mp.almosteq(value, mp.mpf(1) / 3, rel_eps=mp.mpf(10) ** -25)
            assert error < mp.mpf(10) ** -20

    def test_step_function_exhausts_depth(self):
        cfg = QuadratureConfig(max_depth=10)
        third = mp.mpf(1) / 3
        with mp.workdps(30):
            with pytest.raises(AccuracyError) as info:
                adaptive_integrate(lambda x: 1 if x > third else 0, 0.0, 1.0, cfg)
        assert info.value.error_estimate > 0


@pytest.mark.slow
class TestMuCoefficients:

    def test_low_order_values(self, cfg):
        assert mu_n(0, cfg).value == pytest.approx(1.0, rel=1e-15)
        assert mu_n(1, cfg).value == pytest.approx(1 + EULER_GAMMA, rel=1e-14)
        assert mu_n(2, cfg).value == pytest.approx(EULER_GAMMA - GAMMA_1, rel=1e-14)

    def test_kernel_mass(self, cfg):
        assert abs(kernel_mass(cfg) - 0.5) <= 1e-10

    def test_I_n_relation(self, cfg):
        n = 3
        expected = (-1) ** n * math.factorial(n) * mu_n(n, cfg).value
        assert I_n(n, cfg) == pytest.approx(expected, rel=1e-12)

    def test_alternating_sum_decays(self, cfg):
        assert abs(alternating_mu_sum(40, cfg)) < 1e-6

    def test_error_estimate_reported(self, cfg):
        coefficient = mu_n(10, cfg)
        assert coefficient.error_estimate <= 1e-15 * abs(coefficient.value)
        assert coefficient.working_digits == working_digits(10, cfg)

    def test_index_checks(self, cfg):
        with pytest.raises(RangeError):
            mu_n(41, cfg)
        with pytest.raises(DomainError):
            mu_n(-1, cfg)
        with pytest.raises(DomainError):
            mu_n(2.5, cfg)


@pytest.mark.slow
class TestGammaOracle:

    def test_euler_constant(self, cfg):
        estimate = gamma_oracle(0, cfg)
        assert estimate.method is Method.ORACLE
        assert estimate.value == pytest.approx(EULER_GAMMA, abs=1e-8)

    @pytest.mark.parametrize("n", range(2, 21))
    def test_first_table(self, cfg, reference, n):
        estimate = gamma_oracle(n, cfg)
        assert estimate.value == pytest.approx(float(reference[n].exact), rel=1e-5)
        assert estimate.sign == (1 if estimate.value > 0 else -1)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_finite_sum_agrees(self, cfg, n):
        assert gamma_finite_sum(n, cfg) == pytest.approx(gamma_oracle(n, cfg).value, rel=1e-8)

    def test_finite_sum_gamma_1(self, cfg):
        assert gamma_finite_sum(1, cfg) == pytest.approx(GAMMA_1, rel=1e-10)

    @pytest.mark.parametrize("n", range(0, 11))
    def test_tighter_tolerance_stays_within_error_estimate(self, cfg, n):
        coarse = gamma_oracle(n, cfg)
        fine = gamma_oracle(n, replace(cfg, rel_tol=cfg.rel_tol / 2))
        bound = coarse.diagnostics["error_estimate"] + 1e-15 * abs(coarse.value)
        assert abs(fine.value - coarse.value) <= bound

    def test_range_limit(self, cfg):
        with pytest.raises(RangeError):
            gamma_oracle(39, cfg)


@pytest.mark.slow
class TestIdentities:

    @pytest.mark.parametrize("s", [0.5, 2.0, 3.0])
    def test_integral_identity(self, cfg, s):
        assert verify_integral_identity(s, cfg) <= 1e-10

    @pytest.mark.parametrize("s, a", [(2.0, 1.0), (2.0, 0.5), (3.0, 0.25)])
    def test_hurwitz_identity(self, cfg, s, a):
        assert verify_hurwitz_identity(s, a, cfg) <= 1e-8

    def test_domain(self, cfg):
        with pytest.raises(PoleError):
            verify_integral_identity(1.0, cfg)
        with pytest.raises(DomainError):
            verify_integral_identity(-1.5, cfg)
        with pytest.raises(DomainError):
            verify_hurwitz_identity(2.0, 0.0, cfg)
