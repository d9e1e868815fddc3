# Where the reflection amplitude blows up
# ======================================
#
# The first-order amplitude has denominator f(omega). Just above the zero
# crossing omega_tilde, the dispersion term ~ 1/sqrt(eps2) drags f to minus
# infinity, while far above f is close to sqrt(eps1) + sqrt(eps2) > 0. The
# sign change is a pole: stimulated emission.

from superray import (
    InterfaceScattering,
    WeakShockPair,
    f_denominator,
    find_pole,
    pole_asymptotic,
    reflection_first_order,
)

s = InterfaceScattering.from_pair(WeakShockPair(a=1.0, omega_tilde=1.0, delta=1e-3), v=1e-5)

print("x          f(x)")
for x in (1e-20, 1e-14, 1e-11, 1e-10, 1e-8, 1e-3):
    print(f"{x:8.0e}  {f_denominator(s, x=x): .6e}")

rec = find_pole(s)
print(f"\npole at x* = {rec.x_offset:.6e} after {rec.iterations} steps, f(x*) = {rec.f_residual:.1e}")
print(f"leading-order estimate a v^2 / 2 = {rec.asymptotic_prediction:.6e}")

for side in (-1, +1):
    x = rec.x_offset * (1 + side * 1e-3)
    print(f"|r| at x*(1 {'+' if side > 0 else '-'} 1e-3) = {abs(reflection_first_order(s, x=x).r):.1f}")

# The offset is tiny, grows as v**2 and barely depends on the density jump.
print("\n   v       delta    x*           x*/(a v^2/2)")
for v in (1e-6, 1e-5, 1e-4):
    for delta in (1e-4, 1e-2):
        r = find_pole(InterfaceScattering.from_pair(WeakShockPair(1.0, 1.0, delta), v))
        print(f"{v:7.0e} {delta:8.0e}  {r.x_offset:.4e}  {r.x_offset / pole_asymptotic(1.0, v):.6f}")

# To plot f yourself:  superray fdenom --v 1e-5 --delta 1e-3 --plot-data f.txt
