"""Solving the radius equations.

Each class pairs a monotone majorant integral with a distance target.
The smallest positive root, capped at the universal 1/3, is the radius up
to which the coefficient inequality is guaranteed for every member.
"""

from bohrcc import ClassId, janowski, lemniscate, solve_radius, solve_corollary_closed_form
from bohrcc.solver import lhs_at, target_constant, threshold_scan

spec = lemniscate(0.5)
print(f"spec: {spec.label()}")
print(f"{'class':5s} {'r_f':>12s} {'capped':>10s} {'sharp':>6s}  note")
for class_id in ClassId:
    res = solve_radius(class_id, spec)
    print(f"{class_id.value:5s} {res.r_f:12.9f} {res.capped:10.6f} {str(res.sharp):>6s}  {res.notes}")

# The left side really is an increasing integral hitting the target:
res = solve_radius(ClassId.SC, spec)
target = target_constant(ClassId.SC, spec)
print(f"\nSc target (distance bound) = {target:.9f}")
for r in (0.25, res.r_f, 0.35):
    print(f"  lhs({r:.6f}) = {lhs_at(ClassId.SC, spec, r):.9f}")

# Closed-form fast paths agree with the general machinery.
closed = solve_corollary_closed_form("sc-lemniscate", {"s": 0.5})
print(f"\nclosed-form root {closed.r_f:.12f} vs general {res.r_f:.12f}")

# Janowski sweep: tighter specs (B closer to -1) give smaller radii.
print("\nJanowski A=1 sweep:")
for b in (-0.2, -0.5, -0.8, -1.0):
    r = solve_radius(ClassId.SC, janowski(1.0, b)).r_f
    print(f"  B={b:+.1f}: r_f = {r:.6f}")

# Where does sharpness kick in?  The lemniscate radius crosses 1/3 here:
scan = threshold_scan("sc-lemniscate", [0.40 + 0.005 * i for i in range(21)])
print(f"\nradius crosses 1/3 at s = {scan.threshold:.6f} (grid bracket {scan.bracket})")
