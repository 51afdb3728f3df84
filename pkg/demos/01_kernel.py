"""The Cauchy-type kernel psi_alpha.

psi_alpha(z) = int_0^1 x**(alpha-1) / (z - x) dx is evaluated from a Gauss
continued fraction.  We compare it with direct quadrature, with its Laurent
series at infinity, and with the connection formula that exposes the
branch point at z = 0.
"""

import math

import numpy as np
from scipy import integrate

from hadamard_fp import psi_alpha, psi_alpha_connection

alpha = 0.3

# 1. Against adaptive quadrature with the algebraic weight x**(alpha-1).
print("z            continued fraction                  quadrature")
for z in (2.0, 1 + 1j, -1.0, 0.5 + 0.2j):
    opts = dict(weight="alg", wvar=(alpha - 1, 0.0), epsabs=1e-14, epsrel=1e-13, limit=200)
    re = integrate.quad(lambda x: (1 / (z - x)).real, 0, 1, **opts)[0]
    im = integrate.quad(lambda x: (1 / (z - x)).imag, 0, 1, **opts)[0]
    print(f"{z!s:12} {complex(psi_alpha(alpha, z)):.15g}   {complex(re, im):.15g}")

# 2. Far field: psi ~ sum_k z**(-k-1) / (alpha + k).
z = 40 - 30j
laurent = sum(z ** (-k - 1) / (alpha + k) for k in range(40))
print("\nLaurent check at", z, abs(psi_alpha(alpha, z) - laurent))

# 3. Near the segment the connection formula shows the x**(alpha-1) branch.
for t in (1e-1, 1e-3, 1e-6):
    z = -t
    val = psi_alpha_connection(alpha, z)
    branch = -math.pi / math.sin(math.pi * alpha) * t ** (alpha - 1)
    print(f"z = -{t:g}: psi = {val.real: .6e}, branch term alone = {branch: .6e}")

# 4. Vectorized evaluation on the ellipse used later.
u = np.linspace(0, 2 * math.pi, 5, endpoint=False)
print("\non an ellipse:", psi_alpha(alpha, 0.5 + 1.25 * np.cos(u) + 0.75j * np.sin(u)))
