import math

import mpmath as mp
import pytest
from hypothesis import given, strategies as st

from src.core.errors import DomainError
from src.numerics.kernels import (
    ASYMPTOTIC_CUTOFF,
    SERIES_CUTOFF,
    g,
    gaussian_g_model,
    mu,
    mu_mp,
    phi,
    phi_mp,
    psi,
    psi_mp,
)
from src.numerics.models import Regime


class TestValues:

    def test_at_zero(self):
        assert phi(0).value == 0.5
        assert mu(0).value == pytest.approx(1 / 6, rel=1e-15)
        assert g(0).value == pytest.approx(1 / 6, rel=1e-15)
        assert phi(0).regime is Regime.SERIES

    def test_at_one(self):
        assert phi(1).value == pytest.approx(0.3386969, rel=1e-6)
        assert mu(1).value == pytest.approx(0.1509476, rel=1e-6)
        assert g(1).value == pytest.approx(0.41031806026, rel=1e-9)
        assert g(1).value == pytest.approx(math.e * mu(1).value, rel=1e-14)
        assert mu(1).regime is Regime.CLOSED_FORM

    def test_large_t(self):
        assert phi(50).value == pytest.approx(49 * math.exp(-50), rel=1e-12)
        assert mu(50).value == pytest.approx(48 * math.exp(-50), rel=1e-12)
        assert g(50).value == pytest.approx(48.0, rel=1e-12)
        assert mu(50).regime is Regime.ASYMPTOTIC

    def test_negative_t_is_rejected(self):
        for kernel in (phi, mu, g):
            with pytest.raises(DomainError):
                kernel(-0.1)


class TestRegimeBoundaries:
    """Series, closed form and asymptotic form agree where they meet."""

    @pytest.mark.parametrize("kernel", [phi, mu, g])
    def test_series_to_closed_form(self, kernel):
        below = kernel(SERIES_CUTOFF - 1e-12)
        above = kernel(SERIES_CUTOFF)
        assert below.regime is Regime.SERIES
        assert below.value == pytest.approx(above.value, rel=1e-11)

    @pytest.mark.parametrize("kernel", [phi, mu, g])
    def test_closed_form_to_asymptotic(self, kernel):
        inside = kernel(ASYMPTOTIC_CUTOFF)
        outside = kernel(ASYMPTOTIC_CUTOFF + 1e-9)
        assert outside.regime is Regime.ASYMPTOTIC
        assert inside.value == pytest.approx(outside.value, rel=1e-8)


class TestHurwitzKernel:

    def test_a_one_is_phi(self):
        for t in (0.1, 1.0, 10.0):
            assert psi(t, 1.0) == phi(t)

    def test_half(self):
        t = 2.0
        beta = t / math.expm1(t)
        assert psi(t, 0.5).value == pytest.approx(phi(t).value - 0.5 * beta, rel=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            psi(1.0, 0.0)
        with pytest.raises(DomainError):
            psi(1.0, 1.5)


class TestExtendedPrecision:

    @pytest.mark.parametrize("t", [0.01, 0.3, 0.5, 1.0, 5.0, 20.0])
    def test_twins_agree_with_doubles(self, t):
        with mp.workdps(30):
            assert float(mu_mp(t)) == pytest.approx(mu(t).value, rel=1e-13)
            assert float(phi_mp(t)) == pytest.approx(phi(t).value, rel=1e-13)
            assert float(psi_mp(t, 0.25)) == pytest.approx(psi(t, 0.25).value, rel=1e-12)

    @pytest.mark.parametrize("t", ["0.01", "0.3", "1.4"])
    def test_series_matches_closed_form_at_60_digits(self, t):
        with mp.workdps(90):
            q = mp.exp(-mp.mpf(t))
            closed_mu = q * (mp.mpf(t) - 2 + (mp.mpf(t) + 2) * q) / (1 - q) ** 3
            closed_phi = q * (mp.mpf(t) - 1 + q) / (1 - q) ** 2
        with mp.workdps(60):
            assert mp.almosteq(mu_mp(t), closed_mu, rel_eps=mp.mpf(10) ** -55)
            assert mp.almosteq(phi_mp(t), closed_phi, rel_eps=mp.mpf(10) ** -55)

    def test_mu_is_minus_phi_derivative(self):
        with mp.workdps(40):
            for t in (0.2, 0.7, 3.0):
                derivative = mp.diff(phi_mp, t)
                assert mp.almosteq(-derivative, mu_mp(t), rel_eps=mp.mpf(10) ** -25)


@given(st.floats(min_value=0.01, max_value=30.0))
def test_mu_is_minus_phi_derivative_in_doubles(t):
    h = 1e-5
    derivative = (phi(t + h).value - phi(t - h).value) / (2 * h)
    assert -derivative == pytest.approx(mu(t).value, rel=1e-6, abs=1e-12)


@given(st.floats(min_value=0.0, max_value=60.0))
def test_g_is_scaled_mu(t):
    assert g(t).value == pytest.approx(math.exp(t) * mu(t).value, rel=1e-12)


def test_gaussian_model():
    assert gaussian_g_model(0.0) == pytest.approx(1 / 6)
    assert gaussian_g_model(3.0) == 1.0
    with pytest.raises(DomainError):
        gaussian_g_model(-1.0)
