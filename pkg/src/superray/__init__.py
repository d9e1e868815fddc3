"""Superradiant reflection at a moving dielectric shock front.

Permittivity models (:mod:`superray.media`), moving-medium kinematics
(:mod:`superray.kinematics`), reflection amplitudes
(:mod:`superray.scattering`), pole location (:mod:`superray.poles`) and
parameter sweeps (:mod:`superray.sweep`).
"""
from .constants import CONSTANTS, PhysicalConstants, ev_to_omega, omega_to_ev, plasma_frequency
from .errors import ConvergenceError, DomainError, EvanescentBandError, SuperrayError
from .kinematics import (
    Direction,
    DopplerTriple,
    WaveMode,
    alpha,
    doppler_first_order,
    doppler_selfconsistent,
    superradiance_condition,
    wavenumber,
)
from .media import (
    LinearizedSide,
    PlasmaBandMedium,
    WeakShockPair,
    depsilon_domega,
    epsilon_exact,
    epsilon_pair_linearized,
)
from .poles import NoPole, PoleRecord, bracket_pole, find_pole, pole_asymptotic
from .scattering import (
    InterfaceScattering,
    Method,
    ReflectionSolution,
    boundary_solve_oracle,
    f_denominator,
    reflection,
    reflection_first_order,
    reflection_full,
    static_fresnel,
)
from .sweep import GridRange, SpectrumRow, SweepConfig, emitted_energy_estimate, run_sweep

__version__ = "0.1.0"
