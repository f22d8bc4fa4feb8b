"""Reconstructing beta two ways, and watching the routes diverge.

Given alpha and the first superdiagonal t(k) = beta(k, k+1), the triple sum
identity forces beta by a one-step recursion, while delta-orthogonality of
the induced pair forces it by solving the lowest nontrivial constraint.
At gap 2 the two answers agree for every seed; from gap 3 on they differ,
so delta-orthogonality alone does not imply the triple sum identity.
"""

from fractions import Fraction

from invrel import (
    BetaSeed,
    beta_table_inversion,
    beta_table_tsi,
    counterexample_discrepancies,
    counterexample_reference,
)

# the canonical divergent seed: alpha(i,j) = i + j, t(j) = j
seed = BetaSeed(
    alpha=lambda i, j: Fraction(i + j),
    t=lambda j: Fraction(j),
    window=(1, 5),
)

tsi_route = beta_table_tsi(seed)
delta_route = beta_table_inversion(seed)

print("beta(1,n) by the two routes (alpha(i,j) = i+j, t(j) = j):")
print(f"  {'n':>2}  {'triple-sum route':>18}  {'delta route':>14}")
for n in range(2, 6):
    print(f"  {n:>2}  {str(tsi_route[(1, n)]):>18}  {str(delta_route[(1, n)]):>14}")

print("\ndiscrepancies (delta route minus triple-sum route) per k:")
print(f"  {'k':>2}  {'gap 2':>6}  {'gap 3':>10}  {'gap 4':>22}")
for k in range(1, 6):
    gap2, gap3, gap4 = counterexample_discrepancies(k)
    print(f"  {k:>2}  {str(gap2):>6}  {str(gap3):>10}  {str(gap4):>22}")

print("\ngap-3 closed form (8k^3+32k^2+32k+5)/(8k^3+36k^2+52k+24):")
for k in (1, 2):
    _, gap3, _ = counterexample_reference(k)
    print(f"  k={k}: {gap3}")

match = all(
    counterexample_discrepancies(k) == counterexample_reference(k) for k in range(1, 6)
)
print("\nall discrepancies match their closed forms for k = 1..5:", match)
