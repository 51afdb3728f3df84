"""A-priori error bound for the trapezoidal rule.

The parameterized integrand extends analytically to a strip |Im u| < d.
For any d' inside it the error is at most a constant times
exp(-2 pi d' N / period).  select_dprime finds the widest strip that keeps
the mapped contour away from [0, 1] and from the poles of f.
"""

from hadamard_fp import (FpProblem, error_bound, fp_trapezoid_symmetric, make_ellipse,
                         rational_1px2, reference_rational, select_dprime)

p, c = FpProblem(0.1, 2, rational_1px2()), make_ellipse(2)
d = select_dprime(p, c)
ref = reference_rational(0.1, 2)
print(f"d' = {d:.4f}")
print(" N        bound        actual")
for N in range(4, 41, 4):
    actual = abs(fp_trapezoid_symmetric(p, c, N).value - ref)
    # the symmetric rule with N is the full rule with 2N nodes
    print(f"{N:>3}  {error_bound(p, c, d, 2 * N):.3e}   {actual:.3e}")
