"""Bring your own integrand.

An Integrand needs a vectorized evaluator and, optionally, its derivatives
at 0 and the locations of its singularities.  Without derivatives they are
obtained from a Cauchy integral.  Singularities are used to validate the
contour: enclosing one is an error, not a silent wrong answer.
"""

import math

import numpy as np

from hadamard_fp import (ContourError, FpProblem, Integrand, fp_trapezoid_full,
                         fp_trapezoid_symmetric, make_ellipse)

# cos(x) / (x + 2): pole at -2
f = Integrand(lambda z: np.cos(z) / (z + 2), None, (-2.0,), True, "cos/(x+2)")
p = FpProblem(0.5, 3, f)
for N in (8, 16, 32, 64):
    print(N, fp_trapezoid_symmetric(p, make_ellipse(4), N).value)

# rho = 12 reaches past x = -2.5 and so encloses the pole
try:
    fp_trapezoid_symmetric(p, make_ellipse(12), 32)
except ContourError as exc:
    print("rho=12:", exc)

# complex-valued f needs the full rule
g = Integrand(lambda z: np.exp(1j * z), lambda k: 1j**k, (), False, "e^(ix)")
val = fp_trapezoid_full(FpProblem(0.5, 1, g), make_ellipse(8), 48).value
ref = sum(1j**m / (math.factorial(m) * (0.5 - 1 + m)) for m in range(40))
print("e^(ix):", val, "series:", ref)
