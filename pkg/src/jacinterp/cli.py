"""Command-line driver: ``jacinterp <subcommand> [flags]``.

Every subcommand writes one table (CSV with a header line, or JSON as a
list of row objects) to stdout or to ``--out``.  Exit status is 0 on
success, 1 on bad input and 2 on a numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .errors import NumericalError, PreconditionError
from .experiments import run_convergence, run_derivative_comparison
from .functions import get_function
from .jacobi import JacobiParams
from .lebesgue import lebesgue_constant, max_basis_norm
from .normality import normality_report
from .peano import PeanoKernel
from .pointsystems import Family, PointSystemSpec, defining_residual, generate_nodes
from .remez import remez
from .barycentric import uniform_grid

EXIT_OK, EXIT_PRECONDITION, EXIT_NUMERICAL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    # usage errors are bad input, so they share the precondition exit code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PRECONDITION, f"{self.prog}: error: {message}\n")


def parse_n_list(text: str) -> list[int]:
    """``"32,64,128"`` or MATLAB-style ``"10:10:1000"`` (start:step:stop)."""
    text = text.strip()
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) == 2:
                parts = [parts[0], 1, parts[1]]
            start, step, stop = parts
            if step <= 0:
                raise PreconditionError("n-list step must be positive")
            return list(range(start, stop + 1, step))
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise PreconditionError(f"cannot parse n-list {text!r}") from exc


def format_value(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "%.17g" % float(v)
    return str(v)


def _json_value(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else None
    return v


def render(header, rows, fmt="csv") -> str:
    if fmt == "json":
        objs = [{h: _json_value(v) for h, v in zip(header, row)} for row in rows]
        return json.dumps(objs, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_value(v) for v in row])
    return buf.getvalue()


def _params(args, rng):
    def one(v):
        if str(v).lower() == "rand":
            return float(rng.uniform(0.0, 1.0))
        return float(v)
    return JacobiParams(one(args.alpha), one(args.beta))


def _spec(args, rng, n=None):
    return PointSystemSpec(Family.parse(args.family), n or args.n, _params(args, rng))


def _n_list(args):
    if args.n_list:
        return parse_n_list(args.n_list)
    return [args.n]


def cmd_nodes(args, rng):
    ns = generate_nodes(_spec(args, rng))
    res = defining_residual(ns)
    header = ["index", "node", "weight", "residual"]
    return header, [(j, x, w, r) for j, (x, w, r) in enumerate(zip(ns.nodes, ns.bary_weights, res))]


def cmd_lebesgue(args, rng):
    header = ["n", "lambda", "max_basis_norm", "argmax", "basis_argmax"]
    rows = []
    params = _params(args, rng)
    for n in _n_list(args):
        ns = generate_nodes(PointSystemSpec(Family.parse(args.family), n, params))
        lc, bn = lebesgue_constant(ns), max_basis_norm(ns)
        rows.append((n, lc.value, bn.value, lc.argmax, bn.argmax))
    return header, rows


def cmd_normality(args, rng):
    ns = generate_nodes(_spec(args, rng))
    rep = normality_report(ns, args.grid_points)
    header = ["k", "node", "per_k_min", "min_v", "strongly_normal"]
    return header, [(k, x, v, rep.min_v, rep.is_strongly_normal)
                    for k, (x, v) in enumerate(zip(ns.nodes, rep.per_k_min))]


def cmd_kernel(args, rng):
    ns = generate_nodes(_spec(args, rng))
    kern = PeanoKernel(ns, args.x, args.s)
    t = uniform_grid(args.grid_step)
    return ["t", "K"], list(zip(t, kern(t)))


def cmd_remez(args, rng):
    fn = get_function(args.fn)
    degree = args.degree if args.degree is not None else args.n - 1
    res = remez(fn, degree, args.tol)
    header = ["degree", "error", "levelled_error", "iterations", "point_index", "alternation_point"]
    return header, [(degree, res.error, res.levelled_error, res.iterations, i, x)
                    for i, x in enumerate(res.alternation_points)]


def cmd_converge(args, rng):
    spec = _spec(args, rng, n=max(_n_list(args)))
    rep = run_convergence(spec, args.fn, _n_list(args), args.deriv_order, args.grid_step,
                          with_bound=not args.no_bound)
    p = rep.predicted_slope
    ns, errs = rep.ns, rep.errors
    line = errs[-1] * (ns / ns[-1]) ** p if p is not None else np.full(ns.size, np.nan)
    header = ["n", "error", "bound", "predicted_line", "alpha", "beta", "seed"]
    rows = [(int(n), e, b, l, spec.params.alpha, spec.params.beta, args.seed)
            for (n, e, b), l in zip(rep.rows, line)]
    summary = (f"# {spec.label()} f={rep.fn_name} m={rep.deriv_order} "
               f"fitted={rep.fitted_slope} predicted={p} verdict={rep.verdict}")
    return header, rows, summary


def cmd_derivs(args, rng):
    spec = _spec(args, rng, n=max(_n_list(args)))
    orders = tuple(range(args.deriv_order + 1))
    tab = run_derivative_comparison(spec, args.fn, _n_list(args), orders, args.grid_step)
    header = ["n", "m", "interp_error", "remez_error", "alpha", "beta", "seed"]
    rows = [(n, m, ei, eb, spec.params.alpha, spec.params.beta, args.seed) for n, m, ei, eb in tab.rows]
    summary = "# slopes " + " ".join(
        f"m={m}: interp={tab.interp_slopes[m]:.3f} remez={tab.remez_slopes[m]:.3f}"
        for m in sorted(tab.interp_slopes))
    return header, rows, summary


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", default="ChebyshevSecond",
                        help="GaussJacobi, JacobiGaussLobatto, JacobiGaussRadauPlus1, "
                             "JacobiGaussRadauMinus1, ChebyshevFirst, ChebyshevSecond, Equispaced")
    common.add_argument("--alpha", default="0", help="Jacobi alpha, or 'rand' for a seeded U(0,1) draw")
    common.add_argument("--beta", default="0", help="Jacobi beta, or 'rand'")
    common.add_argument("--n", type=int, default=20, help="total number of points")
    common.add_argument("--n-list", default=None, help="e.g. 32,64,128 or 10:10:1000")
    common.add_argument("--fn", default="abs", help="test function name (abs, abs3, abs5, abs7, exp, runge, flat, x2, x3)")
    common.add_argument("--deriv-order", type=int, default=0, choices=(0, 1, 2))
    common.add_argument("--grid-step", type=float, default=0.001)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    p = _Parser(prog="jacinterp", description="Polynomial interpolation at Jacobi-type pointsystems.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("nodes", parents=[common], help="nodes and barycentric weights").set_defaults(func=cmd_nodes)
    sub.add_parser("lebesgue", parents=[common], help="Lebesgue constants and basis norms").set_defaults(func=cmd_lebesgue)
    s = sub.add_parser("normality", parents=[common], help="Hermite-Fejer v_k minima")
    s.add_argument("--grid-points", type=int, default=2001)
    s.set_defaults(func=cmd_normality)
    s = sub.add_parser("kernel", parents=[common], help="Peano kernel K_s on a t-grid")
    s.add_argument("--x", type=float, default=0.0, help="evaluation point of the error functional")
    s.add_argument("--s", type=int, default=1, help="kernel order")
    s.set_defaults(func=cmd_kernel)
    s = sub.add_parser("remez", parents=[common], help="best uniform approximation")
    s.add_argument("--degree", type=int, default=None, help="polynomial degree (default n - 1)")
    s.add_argument("--tol", type=float, default=1e-10)
    s.set_defaults(func=cmd_remez)
    s = sub.add_parser("converge", parents=[common], help="error sweep and slope verdict")
    s.add_argument("--no-bound", action="store_true", help="skip the error-bound column")
    s.set_defaults(func=cmd_converge)
    sub.add_parser("derivs", parents=[common],
                   help="interpolant vs best-approximation derivative errors for m = 0..deriv-order"
                   ).set_defaults(func=cmd_derivs)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    try:
        out = args.func(args, rng)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (NumericalError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    header, rows = out[0], out[1]
    if len(out) > 2:
        print(out[2], file=sys.stderr)
    text = render(header, rows, args.format)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
