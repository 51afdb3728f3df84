"""Gauss hypergeometric functions with unit second parameter, and the
Cauchy-type kernel built from them.

The kernel

    psi_alpha(z) = (1/alpha) z**-1 F(alpha, 1; alpha + 1; 1/z)
                 = int_0^1 x**(alpha - 1) / (z - x) dx

is analytic off the segment [0, 1].  ``F(a, 1; c; z)`` is evaluated with the
Gauss continued fraction, which converges in the whole plane cut along
[1, inf).

All functions accept scalars or numpy arrays and are pure.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "DomainError",
    "ConvergenceError",
    "hyp2f1_b1",
    "kummer_m_series",
    "psi_alpha",
    "psi_alpha_connection",
]

TINY = 1e-300
CF_RTOL = 1e-15
CF_MAX_ITER = 500
CONNECTION_MAX_ITER = 5000
SEGMENT_TOL = 1e-13


class DomainError(ValueError):
    """An argument lies on a branch cut or outside the admissible set."""


class ConvergenceError(ArithmeticError):
    """An iterative evaluation did not converge within its iteration cap."""

    def __init__(self, message: str, iterations: int):
        super().__init__(f"{message} (after {iterations} iterations)")
        self.iterations = iterations


def _cf_coefficients(a: float, c: float, m: int) -> float:
    # k_m in F(a,1;c;z) = 1/(1 - k_1 z/(1 - k_2 z/(1 - ...)))
    if m == 1:
        return a / c
    j, odd = divmod(m - 1, 2)
    if odd == 0:
        return (a + j) * (c - 1 + j) / ((c - 1 + 2 * j) * (c + 2 * j))
    return (j + 1) * (c - a + j) / ((c + 2 * j) * (c + 2 * j + 1))


def _on_ray(z: np.ndarray, start: float, tol: float) -> np.ndarray:
    return (np.abs(z.imag) <= tol) & (z.real >= start - tol)


def hyp2f1_b1(a, c, z, *, rtol: float = CF_RTOL, max_iter: int = CF_MAX_ITER):
    """Gauss hypergeometric function ``F(a, 1; c; z)``.

    Evaluated by the modified Lentz algorithm applied to Gauss's continued
    fraction for the ratio ``F(a, 1; c; z) / F(a, 0; c - 1; z)``.

    Parameters
    ----------
    a, c : float
        Real parameters; ``c`` must not be zero or a negative integer.
    z : complex or array_like
        Argument(s) off the ray ``[1, inf)``.
    rtol : float
        Relative change below which the iteration stops.
    max_iter : int
        Iteration cap.

    Raises
    ------
    DomainError
        If ``c`` is a non-positive integer or some ``z`` lies on ``[1, inf)``.
    ConvergenceError
        If some entry has not converged after ``max_iter`` iterations.
    """
    if c <= 0 and float(c).is_integer():
        raise DomainError(f"c={c} is zero or a negative integer")
    zz = np.asarray(z, dtype=complex)
    scalar = zz.ndim == 0
    zz = np.atleast_1d(zz)
    if not np.all(np.isfinite(zz)):
        raise DomainError("non-finite argument")
    if np.any(_on_ray(zz, 1.0, 0.0)):
        raise DomainError("argument on the branch cut [1, inf)")

    f = np.ones_like(zz)
    C = np.ones_like(zz)
    D = np.zeros_like(zz)
    active = np.ones(zz.shape, dtype=bool)
    m = 0
    for m in range(1, max_iter + 1):
        an = -_cf_coefficients(a, c, m) * zz[active]
        Dm = 1.0 + an * D[active]
        Dm[np.abs(Dm) < TINY] = TINY
        Cm = 1.0 + an / C[active]
        Cm[np.abs(Cm) < TINY] = TINY
        Dm = 1.0 / Dm
        delta = Cm * Dm
        f[active] *= delta
        C[active] = Cm
        D[active] = Dm
        done = np.abs(delta - 1.0) < rtol
        idx = np.flatnonzero(active)
        active[idx[done]] = False
        if not active.any():
            break
    else:
        raise ConvergenceError(
            f"continued fraction for F({a}, 1; {c}; z) diverged at "
            f"{int(active.sum())} point(s)", max_iter)

    out = 1.0 / f
    if not np.all(np.isfinite(out)):
        raise ConvergenceError("non-finite continued fraction value", m)
    return out[0] if scalar else out


def kummer_m_series(a: float, b: float, z: float, max_terms: int = 10_000) -> float:
    """Confluent hypergeometric ``M(a; b; z)`` by direct power series.

    Summation stops once a term drops below ``1e-17`` times the partial sum.
    """
    if b <= 0 and float(b).is_integer():
        raise DomainError(f"b={b} is zero or a negative integer")
    total = 1.0
    term = 1.0
    for k in range(max_terms):
        term *= (a + k) / ((b + k) * (k + 1)) * z
        total += term
        if abs(term) < 1e-17 * abs(total) and abs(z) * abs(a + k + 1) < abs(b + k + 1) * (k + 2):
            break
        if term == 0.0:
            break
    if not math.isfinite(total):
        raise ConvergenceError("confluent series overflowed", k + 1)
    return total


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha={alpha} outside (0, 1)")


def psi_alpha(alpha: float, z, **cf_options):
    """Kernel ``(1/alpha) z**-1 F(alpha, 1; alpha + 1; 1/z)``.

    Equals ``int_0^1 x**(alpha-1) / (z - x) dx`` for ``z`` off ``[0, 1]``.
    Points within ``1e-13`` of the segment are rejected.
    """
    _check_alpha(alpha)
    zz = np.asarray(z, dtype=complex)
    near = (np.abs(zz.imag) <= SEGMENT_TOL) & (zz.real >= -SEGMENT_TOL) & (zz.real <= 1 + SEGMENT_TOL)
    if np.any(near):
        raise DomainError("psi_alpha evaluated on the segment [0, 1]")
    w = 1.0 / zz
    return w * hyp2f1_b1(alpha, alpha + 1.0, w, **cf_options) / alpha


def psi_alpha_connection(alpha: float, z, **cf_options):
    """Kernel via the connection formula

        -pi/sin(pi alpha) (-z)**(alpha-1) - F(1-alpha, 1; 2-alpha; z)/(alpha-1)

    with the principal branch of ``(-z)**(alpha-1)``.  Valid off ``[0, inf)``.
    The continued fraction converges slowly for large ``|z|`` and next to the
    positive axis, so the iteration cap defaults to ``CONNECTION_MAX_ITER``.
    """
    cf_options.setdefault("max_iter", CONNECTION_MAX_ITER)
    _check_alpha(alpha)
    zz = np.asarray(z, dtype=complex)
    if np.any(_on_ray(zz, 0.0, 0.0)):
        raise DomainError("psi_alpha_connection evaluated on the cut [0, inf)")
    mz = -zz
    branch = np.exp((alpha - 1.0) * (np.log(np.abs(mz)) + 1j * np.angle(mz)))
    regular = hyp2f1_b1(1.0 - alpha, 2.0 - alpha, zz, **cf_options)
    return -math.pi / math.sin(math.pi * alpha) * branch - regular / (alpha - 1.0)
