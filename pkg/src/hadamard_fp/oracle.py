"""Reference values that do not go through the contour representation.

Two independent routes:

* the limit definition, evaluated with real adaptive quadrature on
  ``[eps, 1]`` and extrapolated ``eps -> 0``;
* series closed forms for the two benchmark integrands
  ``f = exp`` and ``f = 1/(1 + x**2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .integrands import Integrand
from .quadrature import FpProblem, derivatives_at_zero
from .special import ConvergenceError, DomainError, hyp2f1_b1, kummer_m_series

__all__ = [
    "EpsilonSchedule",
    "LimitResult",
    "regularized_integral",
    "fp_limit_definition",
    "reference_exp",
    "reference_exp_series",
    "reference_rational",
    "reference_rational_series",
    "euler_alternating_sum",
]

REMAINDER_NODES = 96


@dataclass(frozen=True)
class EpsilonSchedule:
    """Cut-offs ``eps0 * ratio**i``, ``i = 0..count-1``."""

    eps0: float = 1e-2
    ratio: float = 0.5
    count: int = 8

    def __post_init__(self):
        if not 0 < self.eps0 <= 0.1:
            raise ValueError(f"eps0={self.eps0} must lie in (0, 0.1]")
        if not 0 < self.ratio < 1:
            raise ValueError(f"ratio={self.ratio} must lie in (0, 1)")
        if self.count < 4:
            raise ValueError("need at least 4 cut-offs")
        if not self.eps0 * self.ratio**self.count > 1e-8:
            raise ValueError("schedule reaches below 1e-8")

    def values(self) -> np.ndarray:
        return self.eps0 * self.ratio ** np.arange(self.count)


@dataclass(frozen=True)
class LimitResult:
    value: float
    error: float
    eps: np.ndarray
    regularized: np.ndarray


def _taylor_remainder_quotient(f: Integrand, n: int, radius: float, M: int = REMAINDER_NODES):
    """``x -> (f(x) - T_{n-1}(x)) / x**n`` via the Cauchy integral

        (2 pi i)^-1 \\oint_{|t|=radius} f(t) t**-n / (t - x) dt,

    which has no cancellation for small ``x``.
    """
    t = radius * np.exp(2j * math.pi * np.arange(M) / M)
    w = np.asarray(f.eval(t), dtype=complex) * t ** (1 - n) / M

    def q(x):
        x = np.asarray(x, dtype=float)
        val = np.sum(w / (t - x[..., None]), axis=-1)
        return val.real if f.real_on_real else val

    return q


def regularized_integral(p: FpProblem, eps: float, split: float | None = None) -> float:
    """``int_eps^1 x**(alpha-1-n) f(x) dx - sum_k eps**(alpha-n+k) f^(k)(0) / (k! (n-k-alpha))``.

    On ``[eps, split]`` the integrand is written as its Taylor polynomial
    plus ``x**n`` times an analytic remainder; the polynomial part is
    integrated exactly, so the divergent powers of ``eps`` cancel
    symbolically instead of in floating point.
    """
    alpha, n, f = p.alpha, p.n, p.f
    dsing = min((abs(s) for s in f.singularities), default=math.inf)
    radius = min(0.5, 0.5 * dsing)
    if split is None:
        split = 0.5 * radius
    if not 0 < eps < 0.75 * radius:
        raise DomainError(f"cut-off eps={eps} too large for the analyticity radius {radius}")
    derivs = derivatives_at_zero(f, n)
    q = _taylor_remainder_quotient(f, n, radius)

    def outer(t):
        x = math.exp(t)
        return x ** (alpha - n) * float(np.real(f.eval(np.array([x]))[0]))

    def inner(t):
        x = math.exp(t)
        return x**alpha * float(q(x))

    opts = dict(epsabs=1e-15, epsrel=1e-13, limit=200)
    far, _ = integrate.quad(outer, math.log(split), 0.0, **opts)
    near, _ = integrate.quad(inner, math.log(eps), math.log(split), **opts)
    # Taylor part on [eps, split] minus the subtracted divergent terms; the
    # eps**(alpha-n+k) pieces cancel exactly.
    poly = math.fsum(
        float(np.real(derivs[k])) / math.factorial(k) * split ** (alpha - n + k) / (alpha - n + k)
        for k in range(n)
    )
    return far + near + poly


def _fit3(eps: np.ndarray, vals: np.ndarray, alpha: float) -> float:
    A = np.stack([np.ones(3), eps**alpha, eps ** (alpha + 1)], axis=1)
    return float(np.linalg.solve(A, vals)[0])


def fp_limit_definition(p: FpProblem, sched: EpsilonSchedule | None = None) -> LimitResult:
    """Finite-part integral from its limit definition.

    The regularized integral behaves like ``L + a eps**alpha + b eps**(alpha+1)
    + ...`` as ``eps -> 0``; ``L`` is fitted from the last three cut-offs.
    The error estimate compares with the fit on the preceding three.

    Raises
    ------
    ConvergenceError
        If successive regularized values do not settle (schedule too
        aggressive for the integrand).
    """
    sched = sched or EpsilonSchedule()
    eps = sched.values()
    vals = np.array([regularized_integral(p, e) for e in eps])
    floor = 1e-13 * max(1.0, float(np.max(np.abs(vals))))
    diffs = np.abs(np.diff(vals))
    tail = diffs[-3:]
    if np.any(tail[1:] > tail[:-1] + floor):
        raise ConvergenceError("regularized integrals are not settling", len(eps))
    best = _fit3(eps[-3:], vals[-3:], p.alpha)
    prev = _fit3(eps[-4:-1], vals[-4:-1], p.alpha)
    return LimitResult(best, abs(best - prev) + floor, eps, vals)


def reference_exp_series(alpha: float, n: int) -> float:
    """``sum_m 1/(m! (alpha - n + m))``, the finite part with ``f = exp``."""
    total, m, fact = 0.0, 0, 1.0
    terms = []
    while True:
        t = 1.0 / (fact * (alpha - n + m))
        terms.append(t)
        if m > n and abs(t) < 1e-17 * abs(math.fsum(terms)):
            break
        m += 1
        fact *= m
    return math.fsum(terms)


def reference_exp(alpha: float, n: int) -> float:
    """``fp int_0^1 x**(alpha-n-1) e**x dx = M(alpha-n; alpha+1-n; 1) / (alpha-n)``."""
    if not 0 < alpha < 1 or n < 1:
        raise DomainError("need 0 < alpha < 1 and n >= 1")
    a = alpha - n
    return kummer_m_series(a, a + 1.0, 1.0) / a


def euler_alternating_sum(b, tol: float = 1e-17, max_terms: int = 200) -> float:
    """``sum_{j>=0} (-1)**j b(j)`` for completely monotone ``b``, by Euler's
    transformation ``sum_k (-1)**k (Delta**k b)(0) / 2**(k+1)``."""
    vals = []
    total = 0.0
    for k in range(max_terms):
        vals.append(b(k))
        # k-th forward difference at 0
        delta = math.fsum((-1) ** (k - i) * math.comb(k, i) * vals[i] for i in range(k + 1))
        term = (-1) ** k * delta / 2 ** (k + 1)
        total += term
        if abs(term) < tol * abs(total):
            return total
    raise ConvergenceError("Euler transformation did not converge", max_terms)


def reference_rational_series(alpha: float, n: int) -> float:
    """``sum_j (-1)**j / (alpha - n + 2j)``; the terms with negative
    denominators are summed directly, the rest by Euler's transformation."""
    a = alpha - n
    j0 = max(0, math.ceil(-a / 2))
    head = math.fsum((-1) ** j / (a + 2 * j) for j in range(j0))
    tail = (-1) ** j0 * euler_alternating_sum(lambda j: 1.0 / (a + 2 * (j + j0)))
    return head + tail


def reference_rational(alpha: float, n: int, check: float = 1e-10) -> float:
    """``fp int_0^1 x**(alpha-n-1)/(1+x**2) dx = Re F(alpha-n, 1; alpha+1-n; i) / (alpha-n)``.

    The continued-fraction value is checked against the alternating series
    (``z = i`` sits on the circle of convergence of the Gauss series).
    """
    if not 0 < alpha < 1 or n < 1:
        raise DomainError("need 0 < alpha < 1 and n >= 1")
    a = alpha - n
    cf = float(np.real(hyp2f1_b1(a, a + 1.0, 1j))) / a
    series = reference_rational_series(alpha, n)
    if abs(cf - series) > check * max(1.0, abs(series)):
        raise ConvergenceError(
            f"continued fraction ({cf!r}) and alternating series ({series!r}) disagree", 0)
    return cf
