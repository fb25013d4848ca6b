"""The two-variable and r-variable functions and their reductions.

Shows the equal-argument collapse onto the Gauss level, the unit-argument
summation in closed regularized-beta form, the single-integral route for
the second-kind function, and the Laplace-type product representation.
"""

import math

from exthyp import (
    EXP_KERNEL,
    AppellParams,
    LauricellaParams,
    RegPair,
    ext_2f1,
    f1_series,
    f2_series,
    f2_single_integral,
    fd_laplace_product,
    fd_series,
    fd_summation_unit,
)

reg = RegPair(0.1, 0.2)

print("equal arguments collapse the first-kind double series onto the")
print("Gauss level with summed numerator parameters:")
p1 = AppellParams(1.0, 0.5, 0.5, 2.0, math.nan, reg)
double = f1_series(p1, 0.3, 0.3).value
single = ext_2f1(EXP_KERNEL, 1.0, 1.0, 2.0, 0.3, reg).value
print(f"  double series {double:.15f}")
print(f"  Gauss level   {single:.15f}")
print()

print("second-kind function: double series vs its one-dimensional")
print("reduction (outer beta weight, inner Gauss-level factor):")
p2 = AppellParams(1.0, 0.6, 0.7, 2.0, 2.2, reg)
s = f2_series(p2, 0.2, 0.3).value
i = f2_single_integral(p2, 0.2, 0.3).value
print(f"  series        {s:.15f}")
print(f"  one-dim route {i:.15f}")
print()

print("three-variable type D at all-unit arguments reduces to a single")
print("regularized beta value:")
pd = LauricellaParams(0.9, (0.5, 0.6), (2.1,), (1.0, 1.0), RegPair(0.2, 0.1))
lhs, rhs = fd_summation_unit(pd)
print(f"  integral      {lhs.value:.15f}")
print(f"  closed form   {rhs.value:.15f}")
print()

print("Laplace-type product representation (two axes):")
pl = LauricellaParams(0.8, (0.9, 1.2), (2.5,), (0.15, 0.2), RegPair(0.1, 0.1))
lhs, rhs = fd_laplace_product(pl)
print(f"  product integral {lhs.value:.15f}")
print(f"  weighted series  {rhs.value:.15f}")
print()

print("series example, three axes:")
p3 = LauricellaParams(0.9, (0.4, 0.6, 0.8), (2.5,), (0.15, -0.25, 0.1), reg)
print(f"  value = {fd_series(p3).value:.15f}")
