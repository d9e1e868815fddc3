"""Physical constants (Gaussian CGS) and the few unit conversions we need.

Everything outside this module is dimensionless: speeds are fractions of c
and frequencies are measured in units of the permittivity zero crossing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import constants as _si

from .errors import DomainError


@dataclass(frozen=True)
class PhysicalConstants:
    electron_charge: float   # esu
    electron_mass: float     # g
    hbar_ev_s: float         # eV s
    hbar_erg_s: float        # erg s
    speed_of_light: float    # cm / s
    erg_per_ev: float

    def __post_init__(self):
        for name, value in vars(self).items():
            if not value > 0:
                raise ValueError(f"{name} must be positive, got {value!r}")


def _codata() -> PhysicalConstants:
    c_cgs = _si.c * 1e2
    # 1 C = c/10 esu with c in cm/s
    e_esu = _si.e * c_cgs / 10.0
    erg_per_ev = _si.e * 1e7
    hbar_ev_s = _si.hbar / _si.e
    return PhysicalConstants(
        electron_charge=e_esu,
        electron_mass=_si.m_e * 1e3,
        hbar_ev_s=hbar_ev_s,
        hbar_erg_s=hbar_ev_s * erg_per_ev,
        speed_of_light=c_cgs,
        erg_per_ev=erg_per_ev,
    )


CONSTANTS = _codata()


def plasma_frequency(n_e: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Electron plasma frequency sqrt(4 pi n e^2 / m) in rad/s.

    Parameters
    ----------
    n_e : float
        Electron number density in cm^-3.
    """
    if not n_e >= 0:
        raise DomainError(f"electron density must be non-negative, got {n_e!r}")
    e = constants.electron_charge
    return math.sqrt(4.0 * math.pi * n_e * e * e / constants.electron_mass)


def omega_to_ev(omega: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Photon energy hbar*omega in eV for an angular frequency in rad/s."""
    if not (math.isfinite(omega) and omega >= 0):
        raise DomainError(f"angular frequency must be finite and >= 0, got {omega!r}")
    return constants.hbar_ev_s * omega


def ev_to_omega(energy: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Inverse of :func:`omega_to_ev`."""
    if not (math.isfinite(energy) and energy >= 0):
        raise DomainError(f"energy must be finite and >= 0, got {energy!r}")
    return energy / constants.hbar_ev_s
