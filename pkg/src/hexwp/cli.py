"""Command-line surface: evaluation, verification suites, grid export,
zeros, lattice sums, periods, and definite integrals.

Exit codes: 0 on success/pass, 1 on verification or evaluation failure,
2 on usage errors. Data goes to stdout, diagnostics to stderr. All numbers
serialize with 17 significant digits (15 for the period report) using
lowercase exponents and no locale dependence.
"""

from __future__ import annotations

import argparse
import cmath
import sys

from . import analysis, fermat, identities, lattice, wfun
from .analysis import RootTarget
from .constants import get_constants, varpi_from_gamma, varpi_quadrature_error
from .errors import HexwpError
from .wfun import EvalOptions

_FMT = "{:.17g}"


def _g(x: float) -> str:
    return _FMT.format(float(x))


def _pair(z: complex) -> str:
    return f"{_g(z.real)},{_g(z.imag)}"


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected RE,IM, got {text!r}")
    return complex(float(parts[0]), float(parts[1]))


_EVAL_FNS = {
    "p": wfun.p,
    "dp": wfun.p_prime,
    "ddp": wfun.p_doubleprime,
    "sigma": wfun.sigma,
    "zeta": wfun.zeta,
    "f": fermat.f,
}


def _cmd_eval(args) -> int:
    fn = _EVAL_FNS[args.fn]
    try:
        value = fn(args.z)
    except HexwpError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        import json

        print(
            json.dumps(
                {
                    "fn": args.fn,
                    "z": {"re": args.z.real, "im": args.z.imag},
                    "value": {"re": value.real, "im": value.imag},
                }
            )
        )
    else:
        print(f"{_g(value.real)} {_g(value.imag)}")
    return 0


def _cmd_verify(args) -> int:
    report = identities.run_suite(args.suite, args.seed, args.tol, args.samples)
    if args.json:
        print(identities.report_to_json(report))
    else:
        print(
            f"# suite={report.suite} seed={report.seed} samples={args.samples} "
            f"tol={_g(report.tolerance)} generator={report.generator}"
        )
        for r in report.checks:
            flag = "PASS" if r.passed else "FAIL"
            print(f"{r.name:32s} {r.max_rel_residual:.3e}  {flag}")
        print(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def _grid_singular_points(fn: str) -> list[complex]:
    """Cell representatives of the singular set (poles) of each function."""
    if fn in ("p", "dp", "ddp", "zeta"):
        return [0j]
    if fn == "f":
        return [0j] + analysis.zeros_of_p()
    return []  # sigma is entire


def _cmd_grid(args) -> int:
    c = get_constants()
    lat = lattice.HexLattice(scale=c.varpi)
    margin = args.margin if args.margin is not None else 0.02 * c.varpi
    if not margin > 0:
        raise ValueError("margin must be positive")
    opts = EvalOptions(pole_margin=min(margin, 0.05 * c.varpi) / 2.0)
    fn = _EVAL_FNS[args.fn]
    singular = _grid_singular_points(args.fn)
    n = args.n
    lines = ["re,im,f_re,f_im,near_pole"]
    for j in range(n):
        t = j / n
        for i in range(n):
            s = i / n
            z = lattice.cell_point(lattice.CellCoords(s, t), lat)
            masked = any(lattice.dist_to_lattice(z - q, lat) < margin for q in singular)
            if not masked:
                try:
                    value = fn(z, opts)
                except HexwpError:
                    masked = True
            if masked:
                lines.append(f"{_g(z.real)},{_g(z.imag)},,,1")
            else:
                lines.append(f"{_g(z.real)},{_g(z.imag)},{_g(value.real)},{_g(value.imag)},0")
    with open(args.out, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {n * n} rows to {args.out}", file=sys.stderr)
    return 0


_ZERO_TARGETS = {
    "p": (RootTarget.P, analysis.zeros_of_p),
    "dp-plus": (RootTarget.DP_PLUS_SQRT3, lambda: analysis.zeros_of_dp_shifted(1)),
    "dp-minus": (RootTarget.DP_MINUS_SQRT3, lambda: analysis.zeros_of_dp_shifted(-1)),
}


def _cmd_zeros(args) -> int:
    c = get_constants()
    target, closed_fn = _ZERO_TARGETS[args.target]
    offset = 0.05 * c.varpi * cmath.exp(0.3j)
    print(f"# target={args.target} tol={_g(args.tol)}")
    ok = True
    for q in closed_fn():
        res = analysis.newton_refine(target, q + offset, tol=args.tol)
        ok = ok and res.converged
        print(
            f"closed={_pair(q)} refined={_pair(res.refined)} "
            f"iterations={res.iterations} converged={str(res.converged).lower()}"
        )
    return 0 if ok else 1


def _cmd_sum(args) -> int:
    if args.per_shell:
        for modulus, count, shell_sum, running in analysis.eisenstein_cubic_shell_partials(
            args.radius
        ):
            print(
                f"shell modulus={_g(modulus)} count={count} "
                f"sum={_pair(shell_sum)} total={_pair(running)}"
            )
    res = analysis.eisenstein_cubic_sum(args.radius)
    print(
        f"radius={_g(res.radius)} partial_sum={_pair(res.partial_sum)} "
        f"target={_pair(res.target)} abs_error={_g(res.abs_error)}"
    )
    return 0


def _cmd_period(args) -> int:
    if args.method == "gamma":
        print(f"varpi={varpi_from_gamma():.15g}")
    else:
        value, estimate = varpi_quadrature_error(args.tol)
        print(f"varpi={value:.15g} error_estimate={estimate:.3e}")
    return 0


def _cmd_integral(args) -> int:
    if args.which == "B4":
        value, estimate = varpi_quadrature_error(args.tol)
    else:
        value, estimate = analysis.third_period_integral_error(args.tol)
    print(f"value={_g(value)} error_estimate={estimate:.3e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexwp",
        description="Weierstrass p, p', sigma, zeta on the hexagonal lattice "
        "(invariants g2=0, g3=1), with verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at one point")
    p_eval.add_argument("--fn", required=True, choices=sorted(_EVAL_FNS))
    p_eval.add_argument("--z", required=True, metavar="RE,IM")
    p_eval.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", default="all", choices=sorted(identities.SUITES))
    p_verify.add_argument("--samples", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--tol", type=float, default=1e-8)
    p_verify.add_argument("--json", action="store_true")

    p_grid = sub.add_parser("grid", help="export an n-by-n cell grid as CSV")
    p_grid.add_argument("--fn", required=True, choices=sorted(_EVAL_FNS))
    p_grid.add_argument("--n", type=int, default=256)
    p_grid.add_argument("--margin", type=float, default=None, help="pole mask radius")
    p_grid.add_argument("--out", required=True)

    p_zeros = sub.add_parser("zeros", help="closed-form zeros with Newton confirmation")
    p_zeros.add_argument("--target", required=True, choices=sorted(_ZERO_TARGETS))
    p_zeros.add_argument("--tol", type=float, default=1e-10)

    p_sum = sub.add_parser("sum", help="Eisenstein cubic lattice sum by complete shells")
    p_sum.add_argument("--radius", type=float, required=True)
    p_sum.add_argument("--per-shell", action="store_true")

    p_period = sub.add_parser("period", help="the real period, two ways")
    p_period.add_argument("--method", required=True, choices=["gamma", "quadrature"])
    p_period.add_argument("--tol", type=float, default=1e-10)

    p_int = sub.add_parser("integral", help="definite integrals with error estimates")
    p_int.add_argument(
        "--which",
        required=True,
        choices=["B4", "C22"],
        help="B4: full period over (4^(-1/3), inf); C22: one-third period over (1, inf)",
    )
    p_int.add_argument("--tol", type=float, default=1e-9)
    return parser


_DISPATCH = {
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "grid": _cmd_grid,
    "zeros": _cmd_zeros,
    "sum": _cmd_sum,
    "period": _cmd_period,
    "integral": _cmd_integral,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        try:
            args.z = _parse_complex(args.z)
        except ValueError as exc:
            parser.error(str(exc))
    if args.command == "grid" and not 16 <= args.n <= 4096:
        parser.error("--n must lie in [16, 4096]")
    try:
        return _DISPATCH[args.command](args)
    except ValueError as exc:
        parser.error(str(exc))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
