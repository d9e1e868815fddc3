"""Normal-incidence reflection at a dielectric front moving with speed ``v``.

Side 1 holds the incident and reflected waves, side 2 the transmitted one.
All amplitudes are real in the transparent band.

Frequencies can be given either absolutely (``omega``) or as the relative
offset ``x = omega / omega_ref - 1`` from the interface's reference
frequency. Near the zero crossing the offset is the only well-conditioned
variable, so the pole search works exclusively in ``x``.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, EvanescentBandError
from .kinematics import FIRST_ORDER_V_LIMIT, DopplerTriple, doppler_shifts
from .media import WeakShockPair

DENOMINATOR_FLOOR = 1e-30


class Method(str, Enum):
    FULL = "full"
    FIRST_ORDER = "first_order"
    ORACLE = "oracle"


@dataclass(frozen=True)
class InterfaceScattering:
    """A plane front between two media moving at ``v`` (fraction of c).

    ``omega_ref`` is the unit for the ``x`` offsets; :meth:`from_pair` sets
    it to the side-2 zero crossing.
    """

    medium1: object
    medium2: object
    v: float
    omega_ref: float
    denominator_floor: float = DENOMINATOR_FLOOR
    v_warn: float = FIRST_ORDER_V_LIMIT

    def __post_init__(self):
        if not (0.0 <= self.v < 1.0):
            raise DomainError(f"v must lie in [0, 1), got {self.v!r}")
        if self.v >= self.v_warn:
            warnings.warn(
                f"v={self.v} is outside the first-order regime (< {self.v_warn})",
                stacklevel=3,
            )
        if not self.omega_ref > 0:
            raise DomainError(f"omega_ref must be positive, got {self.omega_ref!r}")

    @classmethod
    def from_pair(cls, pair: WeakShockPair, v: float, **kw) -> "InterfaceScattering":
        return cls(pair.side1, pair.side2, v, pair.omega_tilde, **kw)

    @classmethod
    def from_media(cls, medium1, medium2, v: float, **kw) -> "InterfaceScattering":
        """Two band-model media; offsets are measured from side 2's zero crossing."""
        return cls(medium1, medium2, v, medium2.omega_tilde, **kw)

    def to_x(self, omega=None, x=None) -> float:
        if (omega is None) == (x is None):
            raise TypeError("give exactly one of omega or x")
        if x is not None:
            return float(x)
        if not omega > 0:
            raise DomainError(f"frequency must be positive, got {omega!r}")
        return omega / self.omega_ref - 1.0

    def to_omega(self, x: float) -> float:
        return self.omega_ref * (1.0 + x)

    def eps1(self, x):
        return self.medium1.eps_at(self.omega_ref, x)

    def eps2(self, x):
        return self.medium2.eps_at(self.omega_ref, x)


@dataclass(frozen=True)
class ReflectionSolution:
    """Amplitude ratios ``r = E1/E0`` and ``t = E2/E0`` with diagnostics.

    ``near_pole`` is set when the denominator magnitude falls under the
    interface's floor; ``r`` and ``t`` are then infinite and
    ``denominator_value`` carries the measured magnitude.
    """

    r: float
    t: float
    triple: DopplerTriple
    denominator_value: float
    method: Method
    near_pole: bool = False


def _sqrt(eps, label):
    if eps < 0:
        raise EvanescentBandError(f"{label} = {eps!r} < 0: outside the transparent band")
    return math.sqrt(eps)


def _shifted(scatter, x):
    """Offsets of the reflected and transmitted waves plus the Doppler triple."""
    e1 = scatter.eps1(x)
    e2 = scatter.eps2(x)
    _sqrt(e1, "eps1(omega)")
    _sqrt(e2, "eps2(omega)")
    s_r, s_2 = doppler_shifts(scatter.v, e1, e2)
    s = 1.0 + x
    x_r = x - s_r * s
    x_2 = x - s_2 * s
    w = scatter.to_omega(x)
    triple = DopplerTriple(w, scatter.omega_ref * (s - s_r * s), scatter.omega_ref * (s - s_2 * s))
    return e1, e2, x_r, x_2, triple


def _solution(scatter, num, den, triple, method):
    if abs(den) < scatter.denominator_floor:
        r = math.copysign(math.inf, num) if num != 0 else math.nan
        return ReflectionSolution(r, r + 1.0, triple, abs(den), method, near_pole=True)
    r = num / den
    return ReflectionSolution(r, 1.0 + r, triple, den, method)


def reflection_full(scatter: InterfaceScattering, omega=None, *, x=None) -> ReflectionSolution:
    """Reflection amplitude with every permittivity at its own shifted frequency.

    ``eps1`` enters the numerator at the incident frequency and the
    denominator at the reflected frequency; ``eps2`` is taken at the
    transmitted frequency. The shifts are the leading-order ones.

    Raises
    ------
    EvanescentBandError
        If any of the three waves falls outside the transparent band. This
        happens close to the pole of the first-order amplitude, where the
        transmitted wave is pushed below the zero crossing.
    """
    x = scatter.to_x(omega, x)
    v = scatter.v
    e1, _, x_r, x_2, triple = _shifted(scatter, x)
    e1_r = scatter.eps1(x_r)
    e2_t = scatter.eps2(x_2)
    n1 = math.sqrt(e1)
    n1_r = _sqrt(e1_r, "eps1(reflected)")
    n2_t = _sqrt(e2_t, "eps2(transmitted)")
    num = n1 - n2_t + v * (e2_t - e1)
    den = n2_t + n1_r - v * (e2_t - e1_r)
    return _solution(scatter, num, den, triple, Method.FULL)


def _first_order_terms(scatter, x):
    e1 = scatter.eps1(x)
    e2 = scatter.eps2(x)
    n1 = _sqrt(e1, "eps1(omega)")
    n2 = _sqrt(e2, "eps2(omega)")
    w_de2 = scatter.medium2.omega_deps_at(scatter.omega_ref, x)
    w_de1 = scatter.medium1.omega_deps_at(scatter.omega_ref, x)
    if n2 == 0.0:
        if scatter.v == 0.0 or n1 == n2:
            dispersion = 0.0
        else:
            raise DomainError("f(omega) is singular where eps2 vanishes")
    else:
        dispersion = (n1 - n2) / (2.0 * n2) * w_de2
    return e1, e2, n1, n2, dispersion, w_de1


def f_denominator(scatter: InterfaceScattering, omega=None, *, x=None) -> float:
    """Denominator f of the first-order amplitude; its roots are the poles.

    Only defined strictly above the side-2 zero crossing, where the
    ``1/sqrt(eps2)`` dispersion term is finite.
    """
    x = scatter.to_x(omega, x)
    e2 = scatter.eps2(x)
    if not e2 > 0:
        raise DomainError(f"f is defined only where eps2 > 0 (got eps2={e2!r} at x={x!r})")
    e1, e2, n1, n2, dispersion, w_de1 = _first_order_terms(scatter, x)
    return n2 + n1 - scatter.v * (e2 - e1 + dispersion + w_de1)


def reflection_first_order(scatter: InterfaceScattering, omega=None, *, x=None) -> ReflectionSolution:
    """Reflection amplitude expanded to first order in ``v``.

    All permittivities and derivatives are evaluated at the incident
    frequency; the denominator is :func:`f_denominator`.
    """
    x = scatter.to_x(omega, x)
    v = scatter.v
    e1, e2, n1, n2, dispersion, w_de1 = _first_order_terms(scatter, x)
    num = n1 - n2 + v * (e2 - e1 + dispersion)
    den = n2 + n1 - v * (e2 - e1 + dispersion + w_de1)
    s_r, s_2 = doppler_shifts(v, e1, e2)
    w = scatter.to_omega(x)
    triple = DopplerTriple(w, w * (1.0 - s_r), w * (1.0 - s_2))
    return _solution(scatter, num, den, triple, Method.FIRST_ORDER)


def _n_cross_h(eps, direction):
    """``n x H`` per unit ``E`` for a plane wave, from ``E = -+ n x H / sqrt(eps)``."""
    return -math.sqrt(eps) if direction == "right" else math.sqrt(eps)


def boundary_solve_oracle(scatter: InterfaceScattering, omega=None, *, x=None) -> ReflectionSolution:
    """Solve the two jump conditions directly for ``(E1, E2)`` with ``E0 = 1``.

    Rows of the linear system::

        E2 - E0 - E1 = 0                              (tangential E continuous)
        n x (H2 - H0 - H1) + v (eps2 E2 - eps1 E0 - eps1_r E1) = 0

    Each wave's ``n x H`` comes from its own permittivity at its own
    frequency. The system goes to a dense solver; no closed-form ratio
    is used.
    """
    x = scatter.to_x(omega, x)
    v = scatter.v
    e1, _, x_r, x_2, triple = _shifted(scatter, x)
    e1_r = scatter.eps1(x_r)
    e2_t = scatter.eps2(x_2)
    _sqrt(e1_r, "eps1(reflected)")
    _sqrt(e2_t, "eps2(transmitted)")
    h0 = _n_cross_h(e1, "right")
    h1 = _n_cross_h(e1_r, "left")
    h2 = _n_cross_h(e2_t, "right")
    system = np.array([
        [-1.0, 1.0],
        [-h1 - v * e1_r, h2 + v * e2_t],
    ])
    rhs = np.array([1.0, h0 + v * e1])
    det = float(np.linalg.det(system))
    if abs(det) < scatter.denominator_floor:
        # singular system: the pole; report the signal with the numerator's sign
        num = system[1, 1] - rhs[1]
        return _solution(scatter, float(num), det, triple, Method.ORACLE)
    e1_amp, e2_amp = np.linalg.solve(system, rhs)
    return ReflectionSolution(float(e1_amp), float(e2_amp), triple, det, Method.ORACLE)


def reflection(scatter, omega=None, *, x=None, method=Method.FULL) -> ReflectionSolution:
    method = Method(method)
    fn = {
        Method.FULL: reflection_full,
        Method.FIRST_ORDER: reflection_first_order,
        Method.ORACLE: boundary_solve_oracle,
    }[method]
    return fn(scatter, omega, x=x)


def static_fresnel(eps1: float, eps2: float) -> float:
    """Normal-incidence Fresnel amplitude of a resting interface."""
    n1 = _sqrt(eps1, "eps1")
    n2 = _sqrt(eps2, "eps2")
    return (n1 - n2) / (n1 + n2)
