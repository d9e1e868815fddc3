"""Cross-module consistency checks run by ``superray validate``."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .errors import EvanescentBandError
from .media import PlasmaBandMedium, WeakShockPair
from .poles import find_pole
from .scattering import (
    InterfaceScattering,
    boundary_solve_oracle,
    reflection_first_order,
    reflection_full,
    static_fresnel,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.name}: {self.detail} ({self.seconds:.3f} s)"


def random_static_interfaces(n, rng):
    """Random weak-shock and band-model interfaces at rest, with a propagating ``x``."""
    out = []
    for i in range(n):
        if i % 2 == 0:
            pair = WeakShockPair(rng.uniform(0.5, 3.0), 1.0, 10 ** rng.uniform(-4, -1))
            scatter = InterfaceScattering.from_pair(pair, 0.0)
        else:
            m2 = PlasmaBandMedium(rng.uniform(0.5, 3.0), rng.uniform(0.5, 2.0))
            m1 = PlasmaBandMedium(rng.uniform(0.5, 3.0), rng.uniform(0.1, 1.0) * m2.omega0)
            scatter = InterfaceScattering.from_media(m1, m2, 0.0)
        x = 10 ** rng.uniform(-6, 0)
        if scatter.eps1(x) <= 0:
            x = 1.0 + x
        out.append((scatter, x))
    return out


def random_moving_points(n, rng, v_max=1e-3):
    """Random ``(scatter, x)`` with all three waves inside the transparent band."""
    out = []
    while len(out) < n:
        pair = WeakShockPair(rng.uniform(0.5, 3.0), 1.0, 10 ** rng.uniform(-4, -1))
        v = 10 ** rng.uniform(-6, math.log10(v_max))
        scatter = InterfaceScattering.from_pair(pair, v)
        x = 10 ** rng.uniform(-6, 0)
        try:
            reflection_full(scatter, x=x)
        except EvanescentBandError:
            continue
        out.append((scatter, x))
    return out


def check_fresnel_reduction(n=1000, seed=0) -> CheckResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    worst_r = worst_e = 0.0
    for scatter, x in random_static_interfaces(n, rng):
        e1, e2 = scatter.eps1(x), scatter.eps2(x)
        ref = static_fresnel(e1, e2)
        for fn in (reflection_full, reflection_first_order, boundary_solve_oracle):
            sol = fn(scatter, x=x)
            worst_r = max(worst_r, abs(sol.r - ref))
            energy = sol.r**2 + math.sqrt(e2) / math.sqrt(e1) * sol.t**2
            worst_e = max(worst_e, abs(energy - 1.0))
    ok = worst_r <= 1e-12 and worst_e <= 1e-10
    return CheckResult(
        "fresnel_reduction", ok,
        f"max |r - fresnel| = {worst_r:.2e}, max |R + T - 1| = {worst_e:.2e}",
        time.perf_counter() - t0,
    )


def check_oracle_equivalence(n=1000, seed=1) -> CheckResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    worst = 0.0
    for scatter, x in random_moving_points(n, rng):
        r_full = reflection_full(scatter, x=x).r
        r_orc = boundary_solve_oracle(scatter, x=x).r
        worst = max(worst, abs(r_full - r_orc) / max(1.0, abs(r_full)))
    return CheckResult(
        "oracle_equivalence", worst <= 1e-10,
        f"max relative gap = {worst:.2e}", time.perf_counter() - t0,
    )


def first_order_gap_slope(a=1.0, delta=1e-3, x=1e-2, v_lo=1e-6, v_hi=1e-3, points=16):
    """Log-log slope of ``|r_full - r_first_order|`` against ``v``."""
    vs = np.geomspace(v_lo, v_hi, points)
    pair = WeakShockPair(a, 1.0, delta)
    gaps = []
    for v in vs:
        s = InterfaceScattering.from_pair(pair, float(v))
        gaps.append(abs(reflection_full(s, x=x).r - reflection_first_order(s, x=x).r))
    slope, _ = np.polyfit(np.log(vs), np.log(gaps), 1)
    return float(slope), vs, np.array(gaps)


def check_v2_scaling() -> CheckResult:
    t0 = time.perf_counter()
    slope, _, _ = first_order_gap_slope()
    return CheckResult(
        "first_order_v2_scaling", abs(slope - 2.0) <= 0.1,
        f"log-log slope = {slope:.4f}", time.perf_counter() - t0,
    )


def check_root_residuals(v=1e-5, a_values=(1.0, 2.0), deltas=(1e-4, 1e-3, 1e-2)) -> CheckResult:
    t0 = time.perf_counter()
    failures = []
    for a in a_values:
        for delta in deltas:
            rec = find_pole(InterfaceScattering.from_pair(WeakShockPair(a, 1.0, delta), v))
            if not rec:
                failures.append(f"a={a}, delta={delta}: {rec.reason}")
                continue
            ratio = rec.x_offset / rec.asymptotic_prediction
            if not (rec.x_offset < 1e-8 and 0.5 <= ratio <= 2.0
                    and abs(rec.f_residual) <= 1e-6 * math.sqrt(2 * a * delta)):
                failures.append(f"a={a}, delta={delta}: x*={rec.x_offset:.3e}, ratio={ratio:.3f}")
    n = len(a_values) * len(deltas)
    detail = f"{n - len(failures)}/{n} grid points ok" + ("; " + "; ".join(failures) if failures else "")
    return CheckResult("root_residuals", not failures, detail, time.perf_counter() - t0)


def run_all() -> list[CheckResult]:
    return [
        check_fresnel_reduction(),
        check_oracle_equivalence(),
        check_v2_scaling(),
        check_root_residuals(),
    ]
