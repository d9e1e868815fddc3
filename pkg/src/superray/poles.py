"""Root of the first-order denominator just above the permittivity zero crossing.

Work is done in ``x = omega / omega_tilde - 1``. The root sits at
``x ~ a v**2 / 2``, many decades below ``delta``, so the bracket is
narrowed by bisecting ``log x`` (geometric midpoints) rather than ``x``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .scattering import InterfaceScattering, f_denominator

X_FLOOR = 1e-300
MAX_BISECTIONS = 400  # bisection from 1e-300 to rel 1e-15 needs < 50


@dataclass(frozen=True)
class NoPole:
    """Structured report that ``f`` has no sign change in ``(0, delta]``."""

    reason: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class PoleRecord:
    omega_star: float
    x_offset: float
    bracket: tuple[float, float]
    f_residual: float
    iterations: int
    asymptotic_prediction: float


def pole_asymptotic(a: float, v: float) -> float:
    """Leading-order offset ``a v**2 / 2`` of the pole from the zero crossing.

    Balancing ``sqrt(2 a delta)`` against the singular dispersion term
    ``v a sqrt(delta / x)`` gives this value; ``delta`` cancels.
    """
    if not a > 0:
        raise DomainError(f"a must be positive, got {a!r}")
    if v < 0:
        raise DomainError(f"v must be non-negative, got {v!r}")
    return 0.5 * a * v * v


def _shock_params(scatter):
    side1, side2 = scatter.medium1, scatter.medium2
    try:
        a = side2.a
        delta = side1.offset / (2.0 * side1.a)
    except AttributeError:
        raise DomainError("pole search needs a weak-shock interface (InterfaceScattering.from_pair)")
    return a, delta


def bracket_pole(scatter: InterfaceScattering):
    """Return ``(x_lo, x_hi)`` with ``f(x_lo) < 0 < f(x_hi)``, or :class:`NoPole`."""
    a, delta = _shock_params(scatter)
    v = scatter.v
    if v == 0:
        return NoPole("v = 0: f = sqrt(eps1) + sqrt(eps2) > 0 everywhere")

    def f(x):
        return f_denominator(scatter, x=x)

    hi = delta
    if not f(hi) > 0:
        return NoPole(f"f(x=delta={delta!r}) = {f(hi)!r} is not positive")
    lo = min(1e-20, pole_asymptotic(a, v) / 20.0)
    while not f(lo) < 0:
        if lo <= X_FLOOR:
            return NoPole("no negative value of f found above the zero crossing")
        lo = max(lo * 1e-8, X_FLOOR)
    return lo, hi


def find_pole(scatter: InterfaceScattering, rel_tol: float = 1e-14):
    """Locate the pole to relative bracket width ``rel_tol`` in ``x``.

    Steps are Illinois false-position in ``log x``, with a geometric
    bisection forced after any step that leaves more than half the bracket.

    Returns a :class:`PoleRecord`, or the :class:`NoPole` report from
    :func:`bracket_pole`.
    """
    if not rel_tol >= 1e-15:
        raise DomainError(f"rel_tol must be >= 1e-15, got {rel_tol!r}")
    bracket = bracket_pole(scatter)
    if not bracket:
        return bracket
    a, _ = _shock_params(scatter)
    lo, hi = bracket
    f_lo = f_denominator(scatter, x=lo)
    f_hi = f_denominator(scatter, x=hi)
    it = 0
    # Illinois false position in log x; a geometric bisection step is forced
    # whenever a step fails to halve the bracket, so the bisection rate holds.
    bisect_next = True
    kept = 0  # +1 while lo is retained, -1 while hi is retained
    w_lo, w_hi = f_lo, f_hi
    while hi - lo > rel_tol * hi and it < MAX_BISECTIONS:
        t_lo, t_hi = math.log(lo), math.log(hi)
        mid = math.sqrt(lo) * math.sqrt(hi)
        if not bisect_next:
            t = (t_lo * w_hi - t_hi * w_lo) / (w_hi - w_lo)
            cand = math.exp(t)
            if lo < cand < hi:
                mid = cand
        if not lo < mid < hi:
            mid = 0.5 * (lo + hi)
            if not lo < mid < hi:
                break
        f_mid = f_denominator(scatter, x=mid)
        it += 1
        if f_mid == 0.0:
            lo = hi = mid
            f_lo = f_hi = 0.0
            break
        if f_mid < 0:
            lo, f_lo, w_lo = mid, f_mid, f_mid
            w_hi = 0.5 * w_hi if kept == -1 else w_hi
            kept = -1
        else:
            hi, f_hi, w_hi = mid, f_mid, f_mid
            w_lo = 0.5 * w_lo if kept == +1 else w_lo
            kept = +1
        new_width = math.log(hi) - math.log(lo)
        bisect_next = not bisect_next and new_width > 0.5 * (t_hi - t_lo)
    # pick whichever end has the smaller residual
    x_star, f_star = (lo, f_lo) if abs(f_lo) <= abs(f_hi) else (hi, f_hi)
    return PoleRecord(
        omega_star=scatter.to_omega(x_star),
        x_offset=x_star,
        bracket=bracket,
        f_residual=f_star,
        iterations=it,
        asymptotic_prediction=pole_asymptotic(a, scatter.v),
    )
