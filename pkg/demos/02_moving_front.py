# A moving front: Doppler shifts and the first-order amplitude
# ===========================================================
#
# Once the shock moves (v > 0, in units of c) the reflected and transmitted
# waves are Doppler shifted. The "full" amplitude evaluates each
# permittivity at its own shifted frequency; the first-order amplitude
# expands everything around the incident frequency. Their gap shrinks as v**2.

import numpy as np

from superray import (
    InterfaceScattering,
    PlasmaBandMedium,
    WeakShockPair,
    doppler_first_order,
    doppler_selfconsistent,
    reflection_first_order,
    reflection_full,
)

pair = WeakShockPair(a=1.0, omega_tilde=1.0, delta=1e-3)
x = 1e-2

print("v          r_full            r_first_order     |gap|/v^2")
for v in np.geomspace(1e-6, 1e-3, 7):
    s = InterfaceScattering.from_pair(pair, float(v))
    full = reflection_full(s, x=x)
    first = reflection_first_order(s, x=x)
    print(f"{v:8.1e}  {full.r:.14f}  {first.r:.14f}  {abs(full.r - first.r) / v**2:.4f}")

t = reflection_full(InterfaceScattering.from_pair(pair, 1e-4), x=x).triple
print(f"\nDoppler triple at v=1e-4: omega={t.omega}, reflected={t.omega_tilde_r}, transmitted={t.omega_2}")

# The shifts quoted above are leading order. Solving the conservation law
# omega - k v = omega_r + k_r v = omega_2 - k_2 v self-consistently differs
# from them only at order v**2.
m1, m2 = PlasmaBandMedium(1.0, 0.5), PlasmaBandMedium(1.2, 0.4)
for v in (1e-5, 1e-4, 1e-3):
    sc = doppler_selfconsistent(1.0, v, m1, m2)
    fo = doppler_first_order(1.0, v, m1.epsilon(1.0), m2.epsilon(1.0))
    print(f"v={v:.0e}: reflected gap / v^2 = {abs(sc.omega_tilde_r - fo.omega_tilde_r) / v**2:.4f}")
