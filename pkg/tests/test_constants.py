import math

import pytest
from hypothesis import given, strategies as st

from superray.constants import CONSTANTS, PhysicalConstants, ev_to_omega, omega_to_ev, plasma_frequency
from superray.errors import DomainError

# CODATA 2018 values typed in by hand, independent of scipy.constants
E_ESU = 4.80320471e-10
M_E_G = 9.1093837e-28
HBAR_EV_S = 6.582119569e-16


def test_constants_positive_and_consistent():
    for value in vars(CONSTANTS).values():
        assert value > 0
    assert CONSTANTS.hbar_ev_s * CONSTANTS.erg_per_ev == pytest.approx(CONSTANTS.hbar_erg_s, rel=1e-12)


def test_constants_match_tabulated():
    assert CONSTANTS.electron_charge == pytest.approx(E_ESU, rel=1e-8)
    assert CONSTANTS.electron_mass == pytest.approx(M_E_G, rel=1e-7)
    assert CONSTANTS.hbar_ev_s == pytest.approx(HBAR_EV_S, rel=1e-9)
    assert CONSTANTS.speed_of_light == 2.99792458e10


def test_nonpositive_constant_rejected():
    fields = dict(vars(CONSTANTS))
    fields["electron_mass"] = 0.0
    with pytest.raises(ValueError):
        PhysicalConstants(**fields)


def test_plasma_frequency_zero_density():
    assert plasma_frequency(0.0) == 0.0


def test_plasma_frequency_1e20():
    expected = math.sqrt(4 * math.pi * 1e20 * E_ESU**2 / M_E_G)
    assert plasma_frequency(1e20) == pytest.approx(expected, rel=1e-7)
    assert plasma_frequency(1e20) == pytest.approx(5.64e14, rel=2e-3)
    assert omega_to_ev(plasma_frequency(1e20)) == pytest.approx(0.371, rel=2e-3)


def test_plasma_frequency_1e21_in_ev():
    expected = HBAR_EV_S * math.sqrt(4 * math.pi * 1e21 * E_ESU**2 / M_E_G)
    assert omega_to_ev(plasma_frequency(1e21)) == pytest.approx(expected, rel=1e-7)
    assert expected == pytest.approx(1.17, rel=5e-3)


def test_negative_density_rejected():
    with pytest.raises(DomainError):
        plasma_frequency(-1.0)


@given(st.floats(1e-3, 1e30))
def test_plasma_frequency_sqrt_scaling(n):
    assert plasma_frequency(4 * n) == pytest.approx(2 * plasma_frequency(n), rel=1e-12)


@given(st.floats(1e-3, 1e30))
def test_plasma_frequency_monotone(n):
    assert plasma_frequency(n * 1.01) > plasma_frequency(n)


def test_ev_omega_examples():
    assert omega_to_ev(0.0) == 0.0
    assert ev_to_omega(1.0) == pytest.approx(1.0 / HBAR_EV_S, rel=1e-9)
    assert ev_to_omega(1.0) == pytest.approx(1.519e15, rel=1e-3)


# hbar*omega must stay out of the subnormal range
@given(st.just(0.0) | st.floats(1e-250, 1e25))
def test_ev_omega_roundtrip(w):
    assert ev_to_omega(omega_to_ev(w)) == pytest.approx(w, rel=1e-14, abs=0.0)


@pytest.mark.parametrize("bad", [-1.0, math.inf, math.nan])
def test_conversions_reject_bad_input(bad):
    with pytest.raises(DomainError):
        omega_to_ev(bad)
    with pytest.raises(DomainError):
        ev_to_omega(bad)
