# Reflection at a resting interface
# =================================
#
# With the front at rest (v = 0) every amplitude in superray collapses to
# the textbook normal-incidence Fresnel coefficient, and reflected plus
# transmitted energy flux add up to one.

import math

from superray import (
    InterfaceScattering,
    WeakShockPair,
    boundary_solve_oracle,
    reflection_first_order,
    reflection_full,
    static_fresnel,
)

pair = WeakShockPair(a=1.0, omega_tilde=1.0, delta=1e-2)
rest = InterfaceScattering.from_pair(pair, v=0.0)

# Frequencies are offsets x = omega/omega_tilde - 1 above the zero crossing.
print(f"{'x':>8} {'eps1':>10} {'eps2':>10} {'fresnel':>12} {'full':>12} {'oracle':>12} {'R+T':>8}")
for x in (1e-4, 1e-3, 1e-2, 1e-1):
    e1, e2 = rest.eps1(x), rest.eps2(x)
    ref = static_fresnel(e1, e2)
    full = reflection_full(rest, x=x)
    orc = boundary_solve_oracle(rest, x=x)
    first = reflection_first_order(rest, x=x)
    assert full.r == first.r
    flux = full.r**2 + math.sqrt(e2 / e1) * full.t**2
    print(f"{x:8.0e} {e1:10.4g} {e2:10.4g} {ref:12.8f} {full.r:12.8f} {orc.r:12.8f} {flux:8.5f}")

# Close to the zero crossing side 2 is almost empty of "optical density", so
# the resting interface already reflects strongly; far above, both sides look
# alike and r -> 0.
