"""Two exact q-series inversion pairs, checked end to end over rationals.

The bibasic (two-base) kernel and the three-parameter kernel both satisfy
the triple sum identity identically; over exact rationals every check below
is equality, not tolerance.
"""

from fractions import Fraction

from invrel import (
    f_entry,
    g_entry,
    gasper_closed_entries,
    gasper_kernel,
    max_anchored_tsi_residual,
    max_antisymmetry_residual,
    max_tsi_residual,
    pair_from_kernel,
    schlosser_closed_entries,
    schlosser_kernel,
    verify_inversion,
)

print("bibasic kernel, a=2 b=3 p=1/5 q=1/7")
gasper = gasper_kernel(Fraction(2), Fraction(3), Fraction(1, 5), Fraction(1, 7))
print("  beta antisymmetry residual on [-3,3]:", max_antisymmetry_residual(gasper, (-3, 3)))
print("  triple-sum residual on [-2,4]^4:    ", max_tsi_residual(gasper, (-2, 4)))
print("  delta on [0,6]:                     ", verify_inversion(pair_from_kernel(gasper, (0, 6))).passed)

closed_f, closed_g = gasper_closed_entries(Fraction(2), Fraction(3), Fraction(1, 5), Fraction(1, 7))
bad = sum(
    closed_f(n, k) != f_entry(gasper, n, k) or closed_g(n, k) != g_entry(gasper, n, k)
    for k in range(0, 6)
    for n in range(k, 6)
)
print("  closed-form entry mismatches, 0<=k<=n<=5:", bad)
print("  e.g. F(4,1) =", f_entry(gasper, 4, 1))

print("\nthree-parameter kernel, a=1/2 b=2 c=7 q=1/3")
schlosser = schlosser_kernel(Fraction(1, 2), Fraction(2), Fraction(7), Fraction(1, 3))
print("  triple-sum residual on [-2,3]^4:   ", max_tsi_residual(schlosser, (-2, 3)))
print("  anchored residual on [-2,3]^3:     ", max_anchored_tsi_residual(schlosser, (-2, 3)))
print("  delta on [0,6]:                    ", verify_inversion(pair_from_kernel(schlosser, (0, 6))).passed)

closed_f, closed_g = schlosser_closed_entries(Fraction(1, 2), Fraction(2), Fraction(7), Fraction(1, 3))
bad = sum(
    closed_f(n, k) != f_entry(schlosser, n, k) or closed_g(n, k) != g_entry(schlosser, n, k)
    for k in range(0, 7)
    for n in range(k, 7)
)
print("  closed-form entry mismatches, 0<=k<=n<=6:", bad)
