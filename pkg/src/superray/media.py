"""Permittivity of the gas on either side of the shock front.

Two models are provided. :class:`PlasmaBandMedium` is the transparency-band
form ``eps(w) = a - (w0/w)**2``. :class:`WeakShockPair` linearizes that form
around its zero crossing for the two sides of a weak shock, where side 1
carries the extra density term ``2 a delta``.

Every model exposes two x-space evaluators used by the scattering code::

    eps_at(omega_ref, x)        -> eps(omega_ref * (1 + x))
    omega_deps_at(omega_ref, x) -> w * d eps / d w at the same frequency

They never form ``omega_ref * (1 + x)`` explicitly, so offsets far below
machine epsilon relative to ``omega_ref`` keep full precision.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import DomainError

WEAK_SHOCK_LIMIT = 0.1


def _check_omega(omega):
    if not omega > 0:
        raise DomainError(f"frequency must be positive, got {omega!r}")


@dataclass(frozen=True)
class PlasmaBandMedium:
    """Transparent-band gas, ``eps(w) = a - (omega0 / w)**2``."""

    a: float
    omega0: float

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError(f"a must be positive, got {self.a!r}")
        if not self.omega0 > 0:
            raise DomainError(f"omega0 must be positive, got {self.omega0!r}")

    @property
    def omega_tilde(self) -> float:
        """Frequency where the permittivity crosses zero."""
        return self.omega0 / math.sqrt(self.a)

    def epsilon(self, omega: float) -> float:
        _check_omega(omega)
        return self.a - (self.omega0 / omega) ** 2

    def depsilon_domega(self, omega: float) -> float:
        _check_omega(omega)
        return 2.0 * self.omega0**2 / omega**3

    def eps_at(self, omega_ref: float, x: float) -> float:
        s = 1.0 + x
        if omega_ref == self.omega_tilde:
            # a - a/s^2 written without cancellation
            return self.a * x * (2.0 + x) / (s * s)
        r0 = (self.omega0 / omega_ref) ** 2
        return ((self.a - r0) + self.a * x * (2.0 + x)) / (s * s)

    def omega_deps_at(self, omega_ref: float, x: float) -> float:
        s = 1.0 + x
        return 2.0 * (self.omega0 / omega_ref) ** 2 / (s * s)


@dataclass(frozen=True)
class LinearizedSide:
    """One side of a weak shock, ``eps(w) = 2a (w/omega_tilde - 1) + offset``."""

    a: float
    omega_tilde: float
    offset: float = 0.0

    def epsilon(self, omega: float) -> float:
        _check_omega(omega)
        return 2.0 * self.a * (omega / self.omega_tilde - 1.0) + self.offset

    def depsilon_domega(self, omega: float) -> float:
        _check_omega(omega)
        return 2.0 * self.a / self.omega_tilde

    def eps_at(self, omega_ref: float, x: float) -> float:
        if omega_ref == self.omega_tilde:
            return 2.0 * self.a * x + self.offset
        ratio = omega_ref / self.omega_tilde
        return 2.0 * self.a * ((ratio - 1.0) + ratio * x) + self.offset

    def omega_deps_at(self, omega_ref: float, x: float) -> float:
        return 2.0 * self.a * (1.0 + x) * (omega_ref / self.omega_tilde)


@dataclass(frozen=True)
class WeakShockPair:
    """Linearized permittivities on both sides of a weak shock.

    Parameters
    ----------
    a : float
        Background constant of the band model.
    omega_tilde : float
        Zero crossing of the side-2 permittivity.
    delta : float
        Relative density jump across the front, dn/n.
    weak_limit : float
        Above this ``delta`` a warning is issued; the linearization is
        only meant for weak shocks.
    """

    a: float
    omega_tilde: float
    delta: float
    weak_limit: float = WEAK_SHOCK_LIMIT

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError(f"a must be positive, got {self.a!r}")
        if not self.omega_tilde > 0:
            raise DomainError(f"omega_tilde must be positive, got {self.omega_tilde!r}")
        if not self.delta > 0:
            raise DomainError(f"delta must be positive, got {self.delta!r}")
        if self.delta > self.weak_limit:
            warnings.warn(
                f"delta={self.delta} exceeds the weak-shock limit {self.weak_limit}",
                stacklevel=3,
            )

    @property
    def side1(self) -> LinearizedSide:
        return LinearizedSide(self.a, self.omega_tilde, 2.0 * self.a * self.delta)

    @property
    def side2(self) -> LinearizedSide:
        return LinearizedSide(self.a, self.omega_tilde, 0.0)

    def exact_medium(self) -> PlasmaBandMedium:
        """Band-model medium sharing side 2's zero crossing."""
        return PlasmaBandMedium(self.a, self.omega_tilde * math.sqrt(self.a))


def epsilon_exact(medium: PlasmaBandMedium, omega: float) -> float:
    """Band-model permittivity; negative below the zero crossing."""
    return medium.epsilon(omega)


def epsilon_pair_linearized(pair: WeakShockPair, omega: float) -> tuple[float, float]:
    """Return ``(eps1, eps2)`` of the weak-shock linearization at ``omega``.

    Below ``pair.omega_tilde`` the side-2 value is negative; callers that
    take square roots must restrict themselves to the propagating band.
    """
    _check_omega(omega)
    eps2 = 2.0 * pair.a * (omega / pair.omega_tilde - 1.0)
    return eps2 + 2.0 * pair.a * pair.delta, eps2


def depsilon_domega(model, omega: float) -> float:
    """Analytic frequency derivative of a permittivity model.

    ``model`` is a :class:`PlasmaBandMedium` or one side of a
    :class:`WeakShockPair` (``pair.side1`` / ``pair.side2``).
    """
    return model.depsilon_domega(omega)
