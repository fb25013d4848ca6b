"""Printed-vs-derived adjudication on the Gauss-level transformations.

Several stated identities disagree with what their own derivations force.
Instead of trusting either side, the library evaluates both and lets the
residuals decide.  This script shows three of those calls directly; the
full sweep lives in `exthyp conformance`.
"""

from exthyp import (
    EXP_KERNEL,
    RegPair,
    euler_transform,
    ext_2f1,
    pfaff_transform,
    recurrence_eval,
)

reg = RegPair(0.3, 0.1)
a1, a2, b1, z = 0.7, 1.8, 2.5, -0.4
lhs = ext_2f1(EXP_KERNEL, a1, a2, b1, z, reg).value

print("argument map z -> z/(z-1) with swapped regularization pair")
for variant in ("printed", "proof"):
    rhs = pfaff_transform(EXP_KERNEL, a1, a2, b1, z, reg, variant=variant)
    print(f"  {variant:>8}: residual = {abs(lhs - rhs.value):.3e}")
print()

reg = RegPair(0.2, 0.5)
a1, a2, b1, z = 1.2, 0.8, 2.7, 0.45
lhs = ext_2f1(EXP_KERNEL, a1, a2, b1, z, reg).value
print("argument-preserving transformation (exponential kernel)")
for variant in ("printed", "proof"):
    rhs = euler_transform(EXP_KERNEL, a1, a2, b1, z, reg, variant=variant)
    print(f"  {variant:>8}: residual = {abs(lhs - rhs.value):.3e}")
print()

print("second-upper-parameter recurrence (n = 2)")
for variant in ("printed", "proof"):
    lhs_r, rhs_r = recurrence_eval("a2_plus", EXP_KERNEL, 0.9, 1.1, 4.2, 2,
                                   0.25, RegPair(0.1, 0.1), variant=variant)
    print(f"  {variant:>8}: residual = {abs(lhs_r.value - rhs_r.value):.3e}")
print()
print("run `exthyp conformance --suite all --grid small` for the complete")
print("catalog with winner adjudication per identity.")
