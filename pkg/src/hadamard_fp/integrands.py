"""Analytic integrands ``f`` and a small registry of built-in ones."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "Integrand",
    "one",
    "exponential",
    "rational_1px2",
    "monomial",
    "polynomial",
    "BUILTINS",
]


@dataclass(frozen=True)
class Integrand:
    """An analytic function together with what the quadrature needs to know.

    Attributes
    ----------
    eval : callable
        Vectorized evaluation at complex points.
    derivs0 : sequence, callable or None
        ``[f(0), f'(0), f''(0), ...]``, or ``k -> f^(k)(0)``.  ``None``
        requests numerical differentiation at the origin.
    singularities : sequence of complex
        Poles and branch points of ``f``; contours must keep them outside.
    real_on_real : bool
        ``f(conj z) == conj f(z)``; enables the half-size symmetric rule.
    """

    eval: Callable[[np.ndarray], np.ndarray]
    derivs0: Sequence[complex] | Callable[[int], complex] | None = None
    singularities: Sequence[complex] = ()
    real_on_real: bool = True
    name: str = field(default="f", compare=False)

    def __call__(self, z):
        return self.eval(z)


def one() -> Integrand:
    return Integrand(lambda z: np.ones_like(np.asarray(z, dtype=complex)),
                     lambda k: 1.0 if k == 0 else 0.0, (), True, "one")


def exponential() -> Integrand:
    return Integrand(np.exp, lambda k: 1.0, (), True, "exp")


def _rational_deriv(k: int) -> float:
    # 1/(1+x^2) = sum_j (-1)^j x^(2j)
    if k % 2:
        return 0.0
    return (-1.0) ** (k // 2) * math.factorial(k)


def rational_1px2() -> Integrand:
    return Integrand(lambda z: 1.0 / (1.0 + np.asarray(z, dtype=complex) ** 2),
                     _rational_deriv, (1j, -1j), True, "rational1px2")


def monomial(m: int) -> Integrand:
    if m < 0:
        raise ValueError("monomial degree must be non-negative")
    return polynomial([0.0] * m + [1.0], name=f"x^{m}")


def polynomial(coeffs: Sequence[float], name: str | None = None) -> Integrand:
    """``sum_j coeffs[j] x**j`` (ascending order)."""
    coeffs = [float(c) for c in coeffs]
    if not coeffs:
        raise ValueError("empty coefficient list")
    # np.polyval wants descending order
    desc = coeffs[::-1]

    def f(z):
        return np.polyval(desc, np.asarray(z, dtype=complex))

    derivs = lambda k: coeffs[k] * math.factorial(k) if k < len(coeffs) else 0.0
    return Integrand(f, derivs, (), True, name or "poly")


BUILTINS: dict[str, Callable[..., Integrand]] = {
    "one": one,
    "exp": exponential,
    "rational1px2": rational_1px2,
    "monomial": monomial,
    "poly": polynomial,
}
