"""Two benchmark finite-part integrals.

    (i)  fp int_0^1 x**(alpha-1-n) e**x dx        on an ellipse with rho = 10
    (ii) fp int_0^1 x**(alpha-1-n) / (1+x**2) dx  on an ellipse with rho = 2

For (ii) the poles at +-i bound the admissible ellipse, so convergence is
slower.  Each sweep prints the relative error against an independent
reference and the fitted geometric rate.
"""

from hadamard_fp import (convergence_study, exponential, make_ellipse, rational_1px2,
                         reference_exp, reference_rational, FpProblem)

alpha = 0.1
for label, f, ref, rho, Ns in (("e^x", exponential(), reference_exp, 10, range(2, 25)),
                               ("1/(1+x^2)", rational_1px2(), reference_rational, 2, range(2, 121))):
    print(f"\n{label}, rho = {rho}")
    for n in range(1, 5):
        rep = convergence_study(FpProblem(alpha, n, f), make_ellipse(rho), Ns, ref(alpha, n))
        head = ", ".join(f"N={N}: {r:.1e}" for N, _, _, r in rep.rows[:8:2])
        print(f"  n={n}  rate {rep.fitted_rate:.3f}  plateau at N={rep.floor_N}  [{head}, ...]")
