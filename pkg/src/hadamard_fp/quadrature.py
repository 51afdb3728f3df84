"""Finite-part integrals ``fp int_0^1 x**(alpha-1-n) f(x) dx`` by contour
quadrature.

For ``f`` analytic on a neighbourhood of [0, 1] and a loop ``C`` around the
segment,

    fp int_0^1 x**(alpha-1-n) f(x) dx
        = (2 pi i)^-1 \\oint_C z**-n f(z) psi_alpha(z) dz
          + sum_{k<n} f^(k)(0) / (k! (alpha - n + k)),

and the loop integral of a periodic analytic integrand is computed with the
equal-mesh trapezoidal rule, which converges geometrically in the number of
nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .contour import Contour, segment_distance, validate_contour, winding_number
from .integrands import Integrand
from .special import ConvergenceError, DomainError, psi_alpha

__all__ = [
    "FpProblem",
    "QuadResult",
    "correction_sum",
    "derivatives_at_zero",
    "derivs_at_zero_cauchy",
    "fp_trapezoid_full",
    "fp_trapezoid_symmetric",
    "loop_integrand",
    "error_bound",
    "strip_is_clean",
    "select_dprime",
]

CAUCHY_NODES = 128
DPRIME_SAFETY = 0.9


@dataclass(frozen=True)
class FpProblem:
    alpha: float
    n: int
    f: Integrand

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha={self.alpha} must lie strictly inside (0, 1)")
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n={self.n} must be a positive integer")


@dataclass(frozen=True)
class QuadResult:
    value: complex | float
    n_points: int
    correction: complex | float
    loop_part: complex | float
    imag_residue: float = 0.0


def correction_sum(alpha: float, n: int, derivs0: Sequence[complex]):
    """``sum_{k=0}^{n-1} f^(k)(0) / (k! (alpha - n + k))``."""
    if len(derivs0) < n:
        raise ValueError(f"need {n} derivatives at 0, got {len(derivs0)}")
    terms = [derivs0[k] / (math.factorial(k) * (alpha - n + k)) for k in range(n)]
    if all(np.isreal(t) for t in terms):
        return math.fsum(float(np.real(t)) for t in terms)
    return complex(math.fsum(np.real(terms)), math.fsum(np.imag(terms)))


def derivs_at_zero_cauchy(f: Integrand, count: int, radius: float | None = None,
                          M: int = CAUCHY_NODES) -> list:
    """Derivatives ``f^(k)(0)``, ``k < count``, from trapezoidal Cauchy
    integrals on the circle ``|z| = radius``.

    The default radius is ``min(0.5, d/2)`` with ``d`` the distance from the
    origin to the nearest declared singularity.
    """
    dsing = min((abs(s) for s in f.singularities), default=math.inf)
    if radius is None:
        radius = min(0.5, 0.5 * dsing)
    if not 0 < radius < dsing:
        raise DomainError(f"Cauchy radius {radius} reaches a singularity of f (distance {dsing})")
    if M < 4 * count:
        raise ValueError(f"M={M} nodes too few for {count} derivatives")
    theta = 2 * math.pi * np.arange(M) / M
    fz = np.asarray(f.eval(radius * np.exp(1j * theta)), dtype=complex)
    coeffs = np.fft.fft(fz) / M
    out = []
    for k in range(count):
        d = coeffs[k] * math.factorial(k) / radius**k
        out.append(float(d.real) if f.real_on_real else complex(d))
    return out


def derivatives_at_zero(f: Integrand, count: int) -> list:
    """``[f(0), ..., f^(count-1)(0)]``, user-supplied values first."""
    d = f.derivs0
    if d is None:
        return derivs_at_zero_cauchy(f, count)
    if callable(d):
        return [d(k) for k in range(count)]
    if len(d) < count:
        raise ValueError(f"integrand {f.name!r} supplies {len(d)} derivatives, need {count}")
    return list(d[:count])


def loop_integrand(p: FpProblem, z: np.ndarray, dz: np.ndarray) -> np.ndarray:
    """``z**-n f(z) psi_alpha(z) dz/du`` at contour points ``z``."""
    return z ** (-p.n) * np.asarray(p.f.eval(z), dtype=complex) * psi_alpha(p.alpha, z) * dz


def _check_nodes(N: int) -> None:
    if int(N) != N or N < 2:
        raise ValueError(f"N={N} must be an integer >= 2")


def _fsum_complex(v: np.ndarray) -> complex:
    return complex(math.fsum(v.real), math.fsum(v.imag))


def fp_trapezoid_full(p: FpProblem, c: Contour, N: int, validate: bool = True) -> QuadResult:
    """N-point trapezoidal rule on the whole loop, ``h = period / N``."""
    _check_nodes(N)
    if validate:
        validate_contour(c, p.f.singularities).raise_if_failed()
    z, dz = c.nodes(N)
    g = loop_integrand(p, z, dz)
    h = c.period / N
    loop = h * _fsum_complex(g) / (2j * math.pi)
    corr = correction_sum(p.alpha, p.n, derivatives_at_zero(p.f, p.n))
    value = loop + corr
    residue = abs(value.imag) if p.f.real_on_real else 0.0
    return QuadResult(value, N, corr, loop, residue)


def fp_trapezoid_symmetric(p: FpProblem, c: Contour, N: int, validate: bool = True) -> QuadResult:
    """Half-size rule for real-on-real ``f`` and a contour symmetric about
    the real axis.

    Uses the ``N + 1`` nodes ``u_k = k h``, ``h = period / (2N)``,
    ``k = 0..N``, of the underlying ``2N``-point rule and folds conjugate
    pairs, so the result is real and equals the full rule with ``2N`` nodes.
    """
    _check_nodes(N)
    if not p.f.real_on_real:
        raise ValueError("symmetric rule needs an integrand that is real on the real axis")
    if not c.symmetric:
        raise ValueError("symmetric rule needs a contour symmetric about the real axis")
    if validate:
        validate_contour(c, p.f.singularities).raise_if_failed()
    h = c.period / (2 * N)
    u = np.arange(N + 1) * h
    z = np.asarray(c.phi(u), dtype=complex)
    dz = np.asarray(c.dphi(u), dtype=complex)
    g = loop_integrand(p, z, dz).imag
    loop = h / (2 * math.pi) * (g[0] + g[N]) + h / math.pi * math.fsum(g[1:N])
    corr = correction_sum(p.alpha, p.n, derivatives_at_zero(p.f, p.n))
    if isinstance(corr, complex):
        corr = corr.real
    return QuadResult(loop + corr, N, corr, loop, 0.0)


def _strip_levels(d_prime: float, levels: int) -> np.ndarray:
    t = np.linspace(0.0, d_prime, levels + 1)[1:]
    return np.concatenate([t, -t])


def strip_is_clean(p: FpProblem, c: Contour, d_prime: float, samples: int = 256,
                   levels: int = 8, clearance: float = 1e-6) -> tuple[bool, str]:
    """Whether ``phi`` maps the strip ``|Im w| <= d_prime`` away from [0, 1]
    and from the singularities of ``f``.

    Checked on ``levels`` horizontal lines per side: each image curve must keep
    its distance from the segment and the singularities and must not change
    its winding number about them.
    """
    probes = [0.0, 0.25, 0.5, 0.75, 1.0]
    for delta in _strip_levels(d_prime, levels):
        z, dz = c.nodes(samples, 1j * delta)
        if not np.all(np.isfinite(z)) or not np.all(np.isfinite(dz)):
            return False, f"non-finite contour image at Im w = {delta:.4g}"
        if np.min(segment_distance(z)) <= clearance:
            return False, f"image of Im w = {delta:.4g} touches [0, 1]"
        for x in probes:
            if abs(winding_number(z, dz, c.period, x) - 1.0) > 1e-3:
                return False, f"image of Im w = {delta:.4g} crosses [0, 1]"
        for s in p.f.singularities:
            if np.min(np.abs(z - s)) <= clearance or abs(winding_number(z, dz, c.period, s)) > 1e-3:
                return False, f"image of Im w = {delta:.4g} reaches singularity {s}"
    return True, ""


def _strip_sup(p: FpProblem, c: Contour, d_prime: float, samples: int) -> float:
    best = 0.0
    for delta in (d_prime, -d_prime):
        z, dz = c.nodes(samples, 1j * delta)
        g = loop_integrand(p, z, dz)
        if not np.all(np.isfinite(g)):
            raise DomainError(f"d' too large: non-finite integrand on Im w = {delta:.4g}")
        best = max(best, float(np.max(np.abs(g))))
    return best


def error_bound(p: FpProblem, c: Contour, d_prime: float, N: int, samples: int = 512) -> float:
    """A-priori bound on ``|fp integral - full N-point rule|``:

        (period/pi) * M * q / (1 - q),   q = exp(-2 pi d' N / period),

    with ``M`` the largest sampled modulus of the loop integrand on the lines
    ``Im w = +-d'``.  The symmetric rule with ``N`` nodes is the full rule
    with ``2N`` nodes.

    Raises
    ------
    DomainError
        "d' too large" when the strip image reaches [0, 1] or a singularity
        of ``f``, or the kernel cannot be evaluated there.
    """
    if not d_prime > 0:
        raise ValueError("d' must be positive")
    ok, why = strip_is_clean(p, c, d_prime)
    if not ok:
        raise DomainError(f"d' too large: {why}")
    try:
        sup = _strip_sup(p, c, d_prime, samples)
    except (ConvergenceError, DomainError) as exc:
        raise DomainError(f"d' too large: {exc}") from exc
    return bound_from_sup(sup, c.period, d_prime, N)


def bound_from_sup(sup: float, period: float, d_prime: float, N: int) -> float:
    q = math.exp(-2 * math.pi * d_prime * N / period)
    return period / math.pi * sup * q / (1.0 - q)


def select_dprime(p: FpProblem, c: Contour, d_min: float = 1e-3, d_max: float = 20.0,
                  growth: float = 2 ** 0.125, safety: float = DPRIME_SAFETY) -> float:
    """Largest strip half-width on a geometric grid for which the strip
    image is clean and the loop integrand evaluates, times ``safety``.
    """
    last = None
    d = d_min
    while d <= d_max:
        ok, _ = strip_is_clean(p, c, d, levels=1)
        if ok:
            try:
                _strip_sup(p, c, d, 128)
            except (ConvergenceError, DomainError):
                ok = False
        if not ok:
            break
        last = d
        d *= growth
    if last is None:
        raise DomainError("no admissible strip width found")
    # confirm with the full sweep of intermediate lines
    cand = last * safety
    while not strip_is_clean(p, c, cand)[0]:
        cand *= safety
        if cand < d_min:
            raise DomainError("no admissible strip width found")
    return cand
