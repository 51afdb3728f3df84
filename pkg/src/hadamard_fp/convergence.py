"""Convergence sweeps over the node count and geometric rate fits."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .contour import Contour
from .quadrature import FpProblem, fp_trapezoid_full, fp_trapezoid_symmetric

__all__ = ["ConvergenceReport", "fit_rate", "plateau_index", "convergence_study"]

EPS = float(np.finfo(float).eps)
PLATEAU = 100 * EPS
# a stall above this is pre-asymptotic, not roundoff
ONSET = 1e-6


@dataclass
class ConvergenceReport:
    """Rows ``(N, value, abs_error, rel_error)`` in ascending ``N``.

    ``fitted_rate`` is ``r`` in ``error ~ C r**N``; ``None`` when fewer than
    three usable rows precede the roundoff plateau.  ``floor_N`` is the first
    ``N`` whose relative error is at the plateau (``None`` if never reached).
    """

    rows: list[tuple[int, float, float, float]]
    reference: float
    fitted_rate: float | None
    floor_N: int | None
    fit_rows: list[int] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = ["N,value,abs_error,rel_error"]
        for N, v, a, r in self.rows:
            lines.append(f"{N},{v!r},{a!r},{r!r}")
        return "\n".join(lines) + "\n"


def plateau_index(rel_errors: Sequence[float], threshold: float = PLATEAU) -> int | None:
    """Index of the first row at the roundoff plateau.

    The plateau level is the larger of ``threshold`` and ten times the
    median error after the sequence first stops decreasing below
    ``ONSET``; the index is that of the first error at or below that level.
    """
    rel = list(rel_errors)
    level = threshold
    for i in range(1, len(rel)):
        if rel[i] >= rel[i - 1] and rel[i - 1] < ONSET:
            level = max(level, 10 * float(np.median(rel[i - 1:])))
            break
    for i, e in enumerate(rel):
        if e <= level:
            return i
    return None


def fit_rate(Ns: Sequence[int], errors: Sequence[float]) -> float:
    """Least-squares fit of ``log(error) = log C + N log r``; returns ``r``."""
    Ns = np.asarray(Ns, dtype=float)
    logs = np.log(np.asarray(errors, dtype=float))
    slope, _ = np.polyfit(Ns, logs, 1)
    return float(math.exp(slope))


def _fit_window(Ns, rel) -> list[int]:
    stop = plateau_index(rel)
    stop = len(rel) if stop is None else stop
    # the first row is pre-asymptotic
    return list(range(1, stop))


def report_from_errors(Ns: Sequence[int], values: Sequence[float], reference: float) -> ConvergenceReport:
    order = np.argsort(Ns, kind="stable")
    Ns = [int(Ns[i]) for i in order]
    values = [float(values[i]) for i in order]
    scale = abs(reference) if reference != 0 else 1.0
    abs_err = [abs(v - reference) for v in values]
    rel = [a / scale for a in abs_err]
    rows = list(zip(Ns, values, abs_err, rel))
    window = _fit_window(Ns, rel)
    rate = fit_rate([Ns[i] for i in window], [rel[i] for i in window]) if len(window) >= 3 else None
    floor = plateau_index(rel)
    return ConvergenceReport(rows, reference, rate, None if floor is None else Ns[floor],
                             [Ns[i] for i in window])


def convergence_study(p: FpProblem, c: Contour, Ns: Iterable[int], reference: float,
                      rule: str = "symmetric") -> ConvergenceReport:
    """Evaluate the rule for every ``N`` and compare with ``reference``."""
    Ns = sorted(int(N) for N in Ns)
    if rule == "symmetric":
        values = [fp_trapezoid_symmetric(p, c, N, validate=(i == 0)).value for i, N in enumerate(Ns)]
    elif rule == "full":
        values = [fp_trapezoid_full(p, c, N, validate=(i == 0)).value.real for i, N in enumerate(Ns)]
    else:
        raise ValueError(f"unknown rule {rule!r}")
    return report_from_errors(Ns, values, reference)
