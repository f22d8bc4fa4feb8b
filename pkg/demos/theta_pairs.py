"""Three theta-function inversion pairs in the numeric domain.

Theta products and partial theta series are genuinely infinite, so these
kernels run over floats under a truncation policy; residuals are small
rather than exactly zero.  The triple sum identity behind the theta-factor
kernel is the classical addition formula, checked here both ways.
"""

from invrel import (
    affine_sequence,
    constant_sequence,
    elliptic_sum_closed_entries,
    elliptic_sum_kernel,
    f_entry,
    max_antisymmetry_residual,
    max_tsi_residual,
    pair_from_kernel,
    partial_theta_kernel,
    partial_theta_slope_quotient,
    partial_theta_slope_series,
    tsi_residual,
    verify_inversion,
    warnaar_kernel,
    weierstrass_addition_residual,
)

print("theta-factor kernel, q=0.1, b_k = 2 + k/10, x_k = 0.3 + 0.05k")
b_seq, x_seq = affine_sequence(2.0, 0.1), affine_sequence(0.3, 0.05)
warnaar = warnaar_kernel(0.1, b_seq, x_seq)
print("  antisymmetry residual on [0,4]:", abs(max_antisymmetry_residual(warnaar, (0, 4))))
report = verify_inversion(pair_from_kernel(warnaar, (0, 4)), tol=1e-9)
print(f"  delta on [0,4]: worst={report.worst:.3e} passed={report.passed}")

# the triple sum at (n,k,p,q) is b_p b_k times the addition-formula residual
n, k, p, q = 4, 0, 2, 1
lhs = tsi_residual(warnaar, n, k, p, q)
rhs = b_seq(p) * b_seq(k) * weierstrass_addition_residual(
    x_seq(n), b_seq(p), b_seq(q), b_seq(k), 0.1
)
print(f"  triple sum vs addition formula at (4,0,2,1): {abs(lhs - rhs):.3e}")

print("\nelliptic-factorial kernel, x=0.3 y=0.7 q=0.4 p=0.1, t_i = 1")
args = (0.3, 0.7, 0.4, 0.1)
elliptic = elliptic_sum_kernel(*args, t_seq=constant_sequence(1.0))
report = verify_inversion(pair_from_kernel(elliptic, (0, 3)), tol=1e-8)
print(f"  delta on [0,3]: worst={report.worst:.3e} passed={report.passed}")
closed_f, _ = elliptic_sum_closed_entries(*args, t_seq=constant_sequence(1.0))
worst = max(
    abs(closed_f(n, k) - f_entry(elliptic, n, k))
    for k in range(0, 4)
    for n in range(k, 4)
)
print(f"  collapsed product form vs generic F: {worst:.3e}")

print("\npartial-theta kernel, q=0.1, a_i = 1 + i/10, b_i = 0.2 + 0.05i")
ptheta = partial_theta_kernel(0.1, affine_sequence(1.0, 0.1), affine_sequence(0.2, 0.05))
report = verify_inversion(pair_from_kernel(ptheta, (0, 3)), tol=1e-8)
print(f"  delta on [0,3]: worst={report.worst:.3e} passed={report.passed}")

# its beta rests on the slope kernel of the partial theta function, which has
# two independent evaluation paths
s = partial_theta_slope_series(1 / 3, 1 / 5, 1 / 10)
r = partial_theta_slope_quotient(1 / 3, 1 / 5, 1 / 10)
print(f"  slope kernel series vs quotient at (1/3, 1/5, 1/10): {abs(s - r):.3e}")
