"""Command line front end.

    hadamard-fp compute  --f exp --alpha 0.1 --n 1 --rho 10 --N 32
    hadamard-fp converge --f rational1px2 --alpha 0.1 --n 4 --rho 2 --Nmin 8 --Nmax 96 --Nstep 4
    hadamard-fp bound    --f exp --alpha 0.1 --n 1 --rho 10 --dprime auto --Nmin 2 --Nmax 14

Exit status: 0 success, 2 usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys

from .contour import ContourError, make_ellipse
from .convergence import convergence_study
from .integrands import BUILTINS, Integrand
from .oracle import reference_exp, reference_rational
from .quadrature import (FpProblem, error_bound, fp_trapezoid_full,
                         fp_trapezoid_symmetric, select_dprime)
from .special import ConvergenceError, DomainError

EXIT_USAGE = 2
EXIT_NUMERIC = 3


class UsageError(Exception):
    pass


def build_integrand(args) -> Integrand:
    if args.f == "monomial":
        if args.m is None or args.m < 0:
            raise UsageError("--f monomial needs --m <non-negative int>")
        return BUILTINS["monomial"](args.m)
    if args.f == "poly":
        if not args.coeffs:
            raise UsageError("--f poly needs --coeffs a0,a1,...")
        try:
            coeffs = [float(s) for s in args.coeffs.split(",")]
        except ValueError:
            raise UsageError(f"bad --coeffs {args.coeffs!r}") from None
        return BUILTINS["poly"](coeffs)
    return BUILTINS[args.f]()


def reference_value(args) -> float:
    """Exact or series value of the finite-part integral for a built-in ``f``."""
    a, n = args.alpha, args.n
    if args.f == "exp":
        return reference_exp(a, n)
    if args.f == "rational1px2":
        return reference_rational(a, n)
    if args.f == "one":
        coeffs = [1.0]
    elif args.f == "monomial":
        coeffs = [0.0] * args.m + [1.0]
    else:
        coeffs = [float(s) for s in args.coeffs.split(",")]
    # fp int_0^1 x**(alpha-1-n+m) dx = 1/(alpha-n+m)
    return sum(cm / (a - n + m) for m, cm in enumerate(coeffs))


def _problem(args):
    if not 0.0 < args.alpha < 1.0:
        raise UsageError(f"--alpha {args.alpha} must lie strictly between 0 and 1")
    if args.n < 1:
        raise UsageError(f"--n {args.n} must be at least 1")
    if not args.rho > 1.0:
        raise UsageError(f"--rho {args.rho} must exceed 1")
    return FpProblem(args.alpha, args.n, build_integrand(args)), make_ellipse(args.rho)


def _node_list(args) -> list[int]:
    if args.N is not None:
        return [args.N]
    if args.Nmin is None or args.Nmax is None:
        raise UsageError("give --N or --Nmin/--Nmax")
    if args.Nstep < 1 or args.Nmin < 2 or args.Nmax < args.Nmin:
        raise UsageError("need 2 <= Nmin <= Nmax and Nstep >= 1")
    return list(range(args.Nmin, args.Nmax + 1, args.Nstep))


def _dprime(args, p, c) -> float:
    if args.dprime in (None, "auto"):
        return select_dprime(p, c)
    try:
        d = float(args.dprime)
    except ValueError:
        raise UsageError(f"bad --dprime {args.dprime!r}") from None
    if not d > 0:
        raise UsageError("--dprime must be positive")
    return d


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _quad(p, c, N, rule):
    if rule == "full":
        return fp_trapezoid_full(p, c, N)
    return fp_trapezoid_symmetric(p, c, N)


def cmd_compute(args) -> int:
    p, c = _problem(args)
    if args.N is None:
        raise UsageError("compute needs --N")
    res = _quad(p, c, args.N, args.rule)
    value = res.value.real if args.rule == "full" else res.value
    bound = None
    if args.dprime is not None:
        d = _dprime(args, p, c)
        full_nodes = args.N if args.rule == "full" else 2 * args.N
        bound = error_bound(p, c, d, full_nodes)
    if args.format == "csv":
        header = "N,value,loop_part,correction" + (",bound" if bound is not None else "")
        row = f"{args.N},{float(value)!r},{float(res.loop_part.real if args.rule == 'full' else res.loop_part)!r},{float(res.correction)!r}"
        if bound is not None:
            row += f",{bound!r}"
        _emit(header + "\n" + row + "\n", args.out)
    else:
        lines = [
            f"value       = {float(value):.17g}",
            f"loop part   = {complex(res.loop_part).real:.17g}",
            f"correction  = {float(res.correction):.17g}",
        ]
        if args.rule == "full" and p.f.real_on_real:
            lines.append(f"imag resid  = {res.imag_residue:.3g}")
        if bound is not None:
            lines.append(f"error bound = {bound:.6g}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_converge(args) -> int:
    p, c = _problem(args)
    Ns = _node_list(args)
    rep = convergence_study(p, c, Ns, reference_value(args), rule=args.rule)
    rate = "indeterminate" if rep.fitted_rate is None else f"{rep.fitted_rate:.6g}"
    if args.format == "csv":
        _emit(rep.to_csv(), args.out)
        print(f"fitted rate: {rate}", file=sys.stderr if not args.out else sys.stdout)
    else:
        lines = [f"{'N':>5} {'value':>24} {'abs_error':>10} {'rel_error':>10}"]
        for N, v, a, r in rep.rows:
            lines.append(f"{N:>5} {v:>24.17g} {a:>10.3e} {r:>10.3e}")
        lines.append(f"reference: {rep.reference:.17g}")
        lines.append(f"fitted rate: {rate}  (error ~ r**N over N = {rep.fit_rows})")
        if rep.floor_N is not None:
            lines.append(f"roundoff plateau from N = {rep.floor_N}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_bound(args) -> int:
    p, c = _problem(args)
    Ns = _node_list(args)
    d = _dprime(args, p, c)
    ref = reference_value(args)
    lines = ["N,bound,actual_error"]
    for N in Ns:
        res = _quad(p, c, N, args.rule)
        actual = abs(complex(res.value) - ref)
        full_nodes = N if args.rule == "full" else 2 * N
        lines.append(f"{N},{error_bound(p, c, d, full_nodes)!r},{actual!r}")
    text = "\n".join(lines) + "\n"
    if args.format == "pretty":
        text = f"# d' = {d!r}\n" + text
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--f", required=True, choices=sorted(BUILTINS))
    common.add_argument("--m", type=int, help="degree for --f monomial")
    common.add_argument("--coeffs", help="ascending coefficients for --f poly")
    common.add_argument("--alpha", type=float, required=True)
    common.add_argument("--n", type=int, required=True)
    common.add_argument("--rho", type=float, required=True)
    common.add_argument("--N", type=int)
    common.add_argument("--Nmin", type=int)
    common.add_argument("--Nmax", type=int)
    common.add_argument("--Nstep", type=int, default=1)
    common.add_argument("--dprime", help="strip half-width, or 'auto'")
    common.add_argument("--rule", choices=["symmetric", "full"], default="symmetric")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--format", choices=["csv", "pretty"], default="pretty")

    parser = argparse.ArgumentParser(
        prog="hadamard-fp",
        description="Finite-part integrals fp int_0^1 x^(alpha-1-n) f(x) dx by contour quadrature.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("compute", parents=[common], help="single value").set_defaults(func=cmd_compute)
    sub.add_parser("converge", parents=[common], help="N sweep and rate fit").set_defaults(func=cmd_converge)
    sub.add_parser("bound", parents=[common], help="a-priori bound vs actual error").set_defaults(func=cmd_bound)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except ContourError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ConvergenceError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
