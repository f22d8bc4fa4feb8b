"""The simplest inversion pair: alpha = 1, beta(i,k) = i - k.

The induced matrices are F(n,k) = 1/(n-k)! and G(n,k) = (-1)^(n-k)/(n-k)!,
and their orthogonality is the alternating binomial identity.  Everything
here is exact rational arithmetic.
"""

from invrel import (
    binomial_kernel,
    f_entry,
    g_entry,
    max_qsi_residual,
    max_tsi_residual,
    pair_from_kernel,
    verify_inversion,
)

kernel = binomial_kernel()

print("Lower-triangular entries F(n,k) for n, k in [0, 5]:")
for n in range(0, 6):
    row = [str(f_entry(kernel, n, k)) for k in range(0, n + 1)]
    print(f"  n={n}: " + "  ".join(row))

print("\nInverse entries G(n,k):")
for n in range(0, 6):
    row = [str(g_entry(kernel, n, k)) for k in range(0, n + 1)]
    print(f"  n={n}: " + "  ".join(row))

# The delta check composes F.G and G.F over the whole window and demands
# exact zeros off the diagonal.
report = verify_inversion(pair_from_kernel(kernel, (0, 8)))
print(f"\ndelta check on [0,8]: passed={report.passed} (mode={report.mode})")

# The kernel satisfies the triple sum identity on every integer quadruple;
# here we sweep a window exhaustively, including negative indices.
print("worst triple-sum residual on [-2,4]^4:", max_tsi_residual(kernel, (-2, 4)))
print("worst quintuple-sum residual on [-2,3]^4:", max_qsi_residual(kernel, (-2, 3)))
