"""Hadamard finite-part integrals with a non-integral endpoint singularity,

    fp int_0^1 x**(alpha-1-n) f(x) dx,   0 < alpha < 1,  n >= 1,

computed by the trapezoidal rule on a closed contour around [0, 1].
"""

from .contour import Contour, ContourError, make_ellipse, validate_contour
from .convergence import ConvergenceReport, convergence_study, fit_rate
from .integrands import Integrand, exponential, monomial, one, polynomial, rational_1px2
from .oracle import (EpsilonSchedule, fp_limit_definition, reference_exp,
                     reference_rational)
from .quadrature import (FpProblem, QuadResult, correction_sum, derivs_at_zero_cauchy,
                         error_bound, fp_trapezoid_full, fp_trapezoid_symmetric,
                         select_dprime)
from .special import (ConvergenceError, DomainError, hyp2f1_b1, kummer_m_series,
                      psi_alpha, psi_alpha_connection)

__version__ = "0.1.0"
