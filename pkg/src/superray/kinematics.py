"""Waves in a uniformly moving medium and Doppler shifts at a moving front.

Speeds are fractions of c. Frequencies may be in any unit; wavenumbers are
returned in the same unit (c = 1).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

from .errors import ConvergenceError, DomainError, EvanescentBandError

FIRST_ORDER_V_LIMIT = 0.01


class Direction(str, Enum):
    RIGHT = "right"
    LEFT = "left"


def _sqrt_eps(eps: float) -> float:
    if eps < 0:
        raise EvanescentBandError(f"negative permittivity {eps!r}: wave is evanescent")
    return math.sqrt(eps)


def alpha(epsilon: float, v: float) -> float:
    """Moving-medium coupling ``(epsilon - 1) * v``."""
    if v < 0:
        raise DomainError(f"v must be non-negative, got {v!r}")
    return (epsilon - 1.0) * v


def wavenumber(epsilon: float, omega: float, v: float, direction=Direction.RIGHT) -> float:
    """Signed wavenumber of a plane wave in a medium moving at ``v``.

    Right movers have ``|k| = (sqrt(eps) + alpha) * omega`` and a positive
    sign; left movers ``(sqrt(eps) - alpha) * omega`` and a negative sign.
    """
    if not omega > 0:
        raise DomainError(f"frequency must be positive, got {omega!r}")
    direction = Direction(direction)
    n = _sqrt_eps(epsilon)
    al = alpha(epsilon, v)
    if direction is Direction.RIGHT:
        return (n + al) * omega
    return -(n - al) * omega


@dataclass(frozen=True)
class WaveMode:
    omega: float
    k: float
    direction: Direction
    epsilon: float
    v: float

    @classmethod
    def build(cls, epsilon, omega, v, direction=Direction.RIGHT, v_warn=FIRST_ORDER_V_LIMIT):
        if v >= v_warn:
            warnings.warn(f"v={v} is outside the first-order regime (< {v_warn})", stacklevel=2)
        direction = Direction(direction)
        return cls(omega, wavenumber(epsilon, omega, v, direction), direction, epsilon, v)

    def compatibility_residual(self) -> float:
        """``A**2 - eps * B**2`` with ``A = eps w^2 - k^2 - alpha k w``, ``B = alpha eps``."""
        al = alpha(self.epsilon, self.v)
        A = self.epsilon * self.omega**2 - self.k**2 - al * self.k * self.omega
        B = al * self.epsilon
        return A * A - self.epsilon * B * B


@dataclass(frozen=True)
class DopplerTriple:
    """Incident, reflected and transmitted frequencies at the moving front."""

    omega: float
    omega_tilde_r: float
    omega_2: float


def doppler_shifts(v: float, eps1: float, eps2: float) -> tuple[float, float]:
    """Fractional first-order downshifts ``(s_r, s_2)``.

    ``omega_tilde_r = omega * (1 - s_r)`` and ``omega_2 = omega * (1 - s_2)``.
    """
    if v < 0:
        raise DomainError(f"v must be non-negative, got {v!r}")
    n1 = _sqrt_eps(eps1)
    n2 = _sqrt_eps(eps2)
    return 2.0 * v * n1, v * (n1 - n2)


def doppler_first_order(omega: float, v: float, eps1: float, eps2: float) -> DopplerTriple:
    """Leading-order Doppler triple, both permittivities taken at ``omega``."""
    s_r, s_2 = doppler_shifts(v, eps1, eps2)
    return DopplerTriple(omega, omega * (1.0 - s_r), omega * (1.0 - s_2))


def _conservation_residuals(omega, v, medium1, medium2, w_r, w_2):
    inv = omega - wavenumber(medium1.epsilon(omega), omega, v, Direction.RIGHT) * v
    k_r = wavenumber(medium1.epsilon(w_r), w_r, v, Direction.LEFT)
    k_2 = wavenumber(medium2.epsilon(w_2), w_2, v, Direction.RIGHT)
    # k_r is signed negative; the relation uses its magnitude
    return (inv - (w_r - k_r * v), inv - (w_2 - k_2 * v))


def doppler_selfconsistent(omega, v, medium1, medium2, tol=1e-14, max_iter=100) -> DopplerTriple:
    """Solve ``w - k v = w_r + |k_r| v = w_2 - k_2 v`` by fixed-point iteration.

    Each wavenumber is evaluated at its own shifted frequency with the
    medium's permittivity. The map contracts with factor ~v, so a handful
    of iterations suffice in the first-order regime.

    Raises
    ------
    ConvergenceError
        If the residuals are not below ``tol * omega`` after ``max_iter``
        iterations.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    eps1 = medium1.epsilon(omega)
    k0 = wavenumber(eps1, omega, v, Direction.RIGHT)
    inv = omega - k0 * v
    w_r = w_2 = omega
    for _ in range(max_iter):
        n_r = -wavenumber(medium1.epsilon(w_r), 1.0, v, Direction.LEFT)
        n_2 = wavenumber(medium2.epsilon(w_2), 1.0, v, Direction.RIGHT)
        new_r = inv / (1.0 + v * n_r)
        new_2 = inv / (1.0 - v * n_2)
        done = abs(new_r - w_r) <= 4e-16 * omega and abs(new_2 - w_2) <= 4e-16 * omega
        w_r, w_2 = new_r, new_2
        if done:
            res_r, res_2 = _conservation_residuals(omega, v, medium1, medium2, w_r, w_2)
            if max(abs(res_r), abs(res_2)) <= tol * omega:
                return DopplerTriple(omega, w_r, w_2)
    res_r, res_2 = _conservation_residuals(omega, v, medium1, medium2, w_r, w_2)
    if max(abs(res_r), abs(res_2)) <= tol * omega:
        return DopplerTriple(omega, w_r, w_2)
    raise ConvergenceError(
        f"Doppler fixed point did not converge in {max_iter} iterations "
        f"(residuals {res_r:.3g}, {res_2:.3g})"
    )


def superradiance_condition(omega: float, k: float, v_source: float) -> bool:
    """Cherenkov-type emission criterion ``omega - k v < 0``."""
    if not omega > 0:
        raise DomainError(f"frequency must be positive, got {omega!r}")
    return omega - k * v_source < 0
