"""Closed analytic contours around the segment [0, 1]."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "Contour",
    "ContourError",
    "ValidationReport",
    "make_ellipse",
    "validate_contour",
    "winding_number",
    "segment_distance",
]

VALIDATION_SAMPLES = 512
CLEARANCE = 1e-6
CLOSURE_TOL = 1e-12
WINDING_TOL = 1e-6


class ContourError(ValueError):
    """Degenerate contour or a contour that fails validation."""


@dataclass(frozen=True)
class Contour:
    """Periodic parameterization ``u -> phi(u)`` of a closed curve.

    ``phi`` and ``dphi`` must accept complex numpy arrays, so that the curve
    can be continued into the strip ``|Im u| < d`` for error bounds.
    """

    phi: Callable[[np.ndarray], np.ndarray]
    dphi: Callable[[np.ndarray], np.ndarray]
    period: float = 2 * math.pi
    symmetric: bool = False
    label: str = field(default="contour", compare=False)

    def nodes(self, n: int, shift: complex = 0.0) -> tuple[np.ndarray, np.ndarray]:
        """Points and derivatives at ``u_k = k * period / n + shift``."""
        u = np.arange(n) * (self.period / n) + shift
        return np.asarray(self.phi(u), dtype=complex), np.asarray(self.dphi(u), dtype=complex)


def make_ellipse(rho: float) -> Contour:
    """Ellipse ``1/2 + (rho + 1/rho)/4 cos u + i (rho - 1/rho)/4 sin u``.

    This is the image of the circle ``|w| = rho`` under the Joukowski map
    sending ``|w| = 1`` onto [0, 1]; foci at 0 and 1.
    """
    if not rho > 1.0:
        raise ContourError(f"ellipse parameter rho={rho} must exceed 1")
    a = 0.25 * (rho + 1.0 / rho)
    b = 0.25 * (rho - 1.0 / rho)

    def phi(u):
        return 0.5 + a * np.cos(u) + 1j * b * np.sin(u)

    def dphi(u):
        return -a * np.sin(u) + 1j * b * np.cos(u)

    return Contour(phi, dphi, 2 * math.pi, True, f"ellipse(rho={rho:g})")


def ellipse_axes(rho: float) -> tuple[float, float]:
    return 0.25 * (rho + 1.0 / rho), 0.25 * (rho - 1.0 / rho)


def winding_number(points: np.ndarray, derivs: np.ndarray, period: float, z0: complex) -> complex:
    """Trapezoidal value of ``(2 pi i)^-1 \\oint dz / (z - z0)``."""
    h = period / len(points)
    return h * np.sum(derivs / (points - z0)) / (2j * math.pi)


def segment_distance(z: np.ndarray) -> np.ndarray:
    """Distance from each ``z`` to the real segment [0, 1]."""
    z = np.asarray(z, dtype=complex)
    x = np.clip(z.real, 0.0, 1.0)
    return np.abs(z - x)


@dataclass
class ValidationReport:
    passed: bool
    closure_residual: float
    winding: complex
    clearance: float
    singularity_windings: list[complex]
    singularity_distances: list[float]
    failures: list[str]

    def raise_if_failed(self) -> None:
        if not self.passed:
            raise ContourError("; ".join(self.failures))


def validate_contour(
    c: Contour,
    singularities: Sequence[complex] = (),
    samples: int = VALIDATION_SAMPLES,
    clearance: float = CLEARANCE,
) -> ValidationReport:
    """Check that ``c`` is a closed, positively oriented loop around [0, 1]
    that keeps every listed singularity outside.

    Never raises; the returned report lists the failed checks.
    """
    failures = []
    z, dz = c.nodes(samples)
    closure = float(abs(c.phi(np.array([c.period]))[0] - c.phi(np.array([0.0]))[0]))
    if not closure <= CLOSURE_TOL * max(1.0, float(np.max(np.abs(z)))):
        failures.append(f"curve not closed (residual {closure:.3g})")

    dist = float(np.min(segment_distance(z)))
    if not dist > clearance:
        failures.append(f"curve within {dist:.3g} of [0, 1]")

    wind = complex(winding_number(z, dz, c.period, 0.5))
    if not abs(wind - 1.0) < WINDING_TOL:
        failures.append(f"winding number about 1/2 is {wind.real:.6g}, expected 1")

    s_wind, s_dist = [], []
    for s in singularities:
        d = float(np.min(np.abs(z - s)))
        s_dist.append(d)
        if d <= clearance:
            failures.append(f"curve passes through singularity {s}")
            s_wind.append(complex("nan"))
            continue
        w = complex(winding_number(z, dz, c.period, s))
        s_wind.append(w)
        if not abs(w) < WINDING_TOL:
            failures.append(f"singularity {s} enclosed (winding {w.real:.3g})")

    return ValidationReport(not failures, closure, wind, dist, s_wind, s_dist, failures)
