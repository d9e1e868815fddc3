# From electron density to photon energy
# ======================================
#
# The pole sits a relative 1e-10 or so above omega_tilde = omega_p / sqrt(a),
# so the emitted photon energy is essentially hbar * omega_p / sqrt(a). With
# the standard plasma frequency sqrt(4 pi n e^2 / m), a density of 1e20 cm^-3
# gives ~0.37 eV. Reaching the 2-6.5 eV window takes n ~ 3e21 - 3e22 cm^-3.

import numpy as np

from superray import GridRange, SweepConfig, emitted_energy_estimate, run_sweep
from superray.sweep import rows_to_csv

for n in (1e20, 1e21, 7e22):
    print(f"n = {n:.0e} cm^-3  ->  hbar omega_tilde = {emitted_energy_estimate(n, 1.0):.3f} eV")

cfg = SweepConfig(
    v_range=GridRange(1e-5, 1e-4, 2),
    delta_range=GridRange(1e-3, 1e-3),
    a_values=(1.0, 2.0),
    n_e_values=tuple(float(n) for n in np.geomspace(1e20, 1e23, 7)),
    omega_tilde_ev=None,
)
rows = run_sweep(cfg, threads=1)
print()
print(rows_to_csv(rows[:8]), end="")
in_window = [r for r in rows if 2.0 <= r.pole_energy_ev <= 6.5]
print(f"\n{len(in_window)} of {len(rows)} grid points emit inside 2.0-6.5 eV")

# The same sweep from the shell:
#   superray sweep --n-e-values 1e20,1e21,1e22,1e23 --delta-points 1 --delta-lo 1e-3 --delta-hi 1e-3
