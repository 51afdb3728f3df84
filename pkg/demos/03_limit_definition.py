"""The finite part as a limit.

fp int_0^1 = lim_{eps->0} [ int_eps^1 x**(alpha-1-n) f(x) dx - divergent terms ].
The oracle evaluates the bracket for a geometric sequence of cut-offs and
extrapolates.  It is slow and only good to about 1e-8, but shares no code
with the contour rule, so agreement is a meaningful check.
"""

from hadamard_fp import (EpsilonSchedule, FpProblem, exponential, fp_limit_definition,
                         fp_trapezoid_symmetric, make_ellipse, reference_exp)

p = FpProblem(0.3, 2, exponential())
res = fp_limit_definition(p, EpsilonSchedule(eps0=1e-2, ratio=0.5, count=8))
print("eps            regularized integral")
for e, v in zip(res.eps, res.regularized):
    print(f"{e:<14.3e} {v:.15f}")
print(f"extrapolated   {res.value:.15f}  (+- {res.error:.1e})")
print(f"series         {reference_exp(0.3, 2):.15f}")
print(f"contour rule   {fp_trapezoid_symmetric(p, make_ellipse(10), 24).value:.15f}")
