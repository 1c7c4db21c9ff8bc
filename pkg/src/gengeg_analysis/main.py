"""Command line front end: gengeg-analysis {eval, table, quadrature, verify, asymptotics}.

Exit codes: 0 success (or every verdict pass), 1 a verdict failed or a numerical
error occurred, 2 usage or domain error. Data goes to stdout or --out, every
human-readable message to stderr.
"""
import argparse
import inspect
import logging
import sys

import numpy as np
import pandas as pd
from pydantic import ValidationError

from gengeg_analysis.asymptotics.state import Verdict
from gengeg_analysis.asymptotics.verifications import verification_definitions, verify_theorem1
from gengeg_analysis.exception.exception import ComputationError, DomainError, GengegAnalysisException
from gengeg_analysis.logging_app.logger import configure_logging
from gengeg_analysis.polynomials.gegenbauer import (
    gegenbauer_eval,
    gegenbauer_values,
    gengeg_eval,
    gengeg_orthonormal_eval,
    gengeg_values,
    orthonormal_coefficient,
    plain_coefficient,
)
from gengeg_analysis.polynomials.jacobi import check_degree, jacobi_eval, jacobi_table
from gengeg_analysis.polynomials.params import GegenParams, JacobiParams
from gengeg_analysis.quadrature.gauss_jacobi import gauss_jacobi_rule
from gengeg_analysis.report.emit import emit_frame, emit_report, summarize

logger = logging.getLogger(__name__)

FAMILIES = ("jacobi", "gegenbauer", "gengeg", "gengeg-orthonormal")
FAMILY_PARAMETERS = {
    "jacobi": ("alpha", "beta"),
    "gegenbauer": ("lambda_",),
    "gengeg": ("lambda_", "mu"),
    "gengeg-orthonormal": ("lambda_", "mu"),
}
FLAG_NAMES = {"alpha": "--alpha", "beta": "--beta", "lambda_": "--lambda", "mu": "--mu"}


class UsageError(DomainError):
    """Flags that parse but do not fit together."""


def format_number(value) -> str:
    return f"{float(value) + 0.0:.15g}"


def _add_parameters(parser):
    parser.add_argument("--alpha", type=float, help="Jacobi parameter alpha > -1")
    parser.add_argument("--beta", type=float, help="Jacobi parameter beta > -1")
    parser.add_argument("--lambda", dest="lambda_", type=float, help="parameter lambda > -1/2")
    parser.add_argument("--mu", type=float, help="parameter mu >= 0")


def _add_output(parser):
    parser.add_argument("--out", help="output file (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default=None,
                        help="output format (default: csv, or json for an --out ending in .json)")


def _grid(value):
    if value == "auto":
        return None
    points = int(value)
    if points < 64:
        raise argparse.ArgumentTypeError(f"grid size must be 'auto' or an integer >= 64, got {value!r}")
    return points


def _n_list(value):
    try:
        return [int(n) for n in value.split(",") if n.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gengeg-analysis",
        description="Jacobi and generalized Gegenbauer polynomials: evaluation, quadrature and sup-norm asymptotics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one polynomial at one point")
    p.add_argument("--family", choices=FAMILIES, required=True)
    _add_parameters(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=float, required=True)

    p = sub.add_parser("table", help="values of degrees 0..n-max on a uniform t grid (long format)")
    p.add_argument("--family", choices=FAMILIES, required=True)
    _add_parameters(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--points", type=int, default=21, help="number of equispaced t in [-1, 1]")
    _add_output(p)

    p = sub.add_parser("quadrature", help="Gauss-Jacobi nodes and weights")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--m", type=int, required=True, help="number of nodes")
    _add_output(p)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("name", choices=[d["name"] for d in verification_definitions])
    _add_parameters(p)
    p.add_argument("--n-values", type=_n_list, help="comma-separated increasing indices")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--grid", type=_grid, default=None, help="sup-norm grid size or 'auto'")
    p.add_argument("--slope-tol", type=float)
    p.add_argument("--band-tol", type=float)
    p.add_argument("--workers", type=int)
    _add_output(p)

    p = sub.add_parser("asymptotics", help="sup-norm sweep of the orthonormal family with exponent fit")
    p.add_argument("--lambda", dest="lambda_", type=float, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--grid", type=_grid, default=None, help="sup-norm grid size or 'auto'")
    p.add_argument("--slope-tol", type=float)
    p.add_argument("--band-tol", type=float)
    p.add_argument("--workers", type=int, default=1)
    _add_output(p)
    return parser


def _params_for(family, args):
    wanted = FAMILY_PARAMETERS[family]
    for name in FLAG_NAMES:
        given = getattr(args, name, None) is not None
        if name in wanted and not given:
            raise UsageError(f"family {family} needs {FLAG_NAMES[name]}")
        if name not in wanted and given:
            raise UsageError(f"{FLAG_NAMES[name]} does not apply to family {family}")
    if family == "jacobi":
        return JacobiParams(alpha=args.alpha, beta=args.beta)
    if family == "gegenbauer":
        return GegenParams(lambda_=args.lambda_, mu=0.0)
    return GegenParams(lambda_=args.lambda_, mu=args.mu)


def _output_format(args) -> str:
    if args.format:
        return args.format
    if args.out and args.out.lower().endswith(".json"):
        return "json"
    return "csv"


def _cmd_eval(args) -> int:
    params = _params_for(args.family, args)
    n = check_degree(args.n)
    if args.family == "jacobi":
        value = jacobi_eval(params, n, args.t).values[n]
    elif args.family == "gegenbauer":
        value = gegenbauer_eval(params.lam, n, args.t)
    elif args.family == "gengeg":
        value = gengeg_eval(params, n, args.t)
    else:
        value = gengeg_orthonormal_eval(params, n, args.t)
    print(format_number(value))
    return 0


def _table_frame(family, params, n_max, points) -> pd.DataFrame:
    t = np.linspace(-1.0, 1.0, points)
    if family == "jacobi":
        rows = jacobi_table(params.alpha, params.beta, n_max, t)
    elif family == "gegenbauer":
        rows = np.array([gegenbauer_values(params.lam, n, t) for n in range(n_max + 1)])
    else:
        coefficient = plain_coefficient if family == "gengeg" else lambda p, n: orthonormal_coefficient(p, n).value
        rows = np.array([gengeg_values(params, n, t, coefficient(params, n)) for n in range(n_max + 1)])
    return pd.DataFrame({
        "t": np.tile(t, n_max + 1),
        "n": np.repeat(np.arange(n_max + 1), points),
        "value": rows.ravel() + 0.0,
    })


def _cmd_table(args) -> int:
    params = _params_for(args.family, args)
    n_max = check_degree(args.n_max, "n_max")
    if args.points < 2:
        raise UsageError(f"--points must be at least 2, got {args.points}")
    emit_frame(_table_frame(args.family, params, n_max, args.points), _output_format(args), args.out)
    return 0


def _cmd_quadrature(args) -> int:
    rule = gauss_jacobi_rule(JacobiParams(alpha=args.alpha, beta=args.beta), args.m)
    frame = pd.DataFrame({"node": rule.nodes, "weight": rule.weights})
    emit_frame(frame, _output_format(args), args.out)
    return 0


def _finish(report, args) -> int:
    print(summarize(report), file=sys.stderr)
    if args.out or args.format:
        emit_report(report, _output_format(args), args.out)
    return 1 if report.verdict is Verdict.FAIL else 0


def _cmd_verify(args) -> int:
    definition = next(d for d in verification_definitions if d["name"] == args.name)
    params = _params_for(definition["family"], args)
    options = {
        "n_values": args.n_values,
        "n_min": args.n_min,
        "n_max": args.n_max,
        "samples": args.samples,
        "grid_points": args.grid,
        "slope_tol": args.slope_tol,
        "band_tol": args.band_tol,
        "max_workers": args.workers,
    }
    accepted = inspect.signature(definition["func"]).parameters
    kwargs = {}
    for key, value in options.items():
        if value is None:
            continue
        if key not in accepted:
            raise UsageError(f"option for {key} does not apply to verify {args.name}")
        kwargs[key] = value
    logger.info("verify %s with %s and %s", args.name, params, kwargs)
    return _finish(definition["func"](params, **kwargs), args)


def _cmd_asymptotics(args) -> int:
    params = GegenParams(lambda_=args.lambda_, mu=args.mu)
    report = verify_theorem1(
        params,
        n_min=args.n_min,
        n_max=args.n_max,
        samples=args.samples,
        slope_tol=args.slope_tol,
        band_tol=args.band_tol,
        grid_points=args.grid,
        max_workers=args.workers,
    )
    print(summarize(report), file=sys.stderr)
    emit_report(report, _output_format(args), args.out)
    return 1 if report.verdict is Verdict.FAIL else 0


COMMANDS = {
    "eval": _cmd_eval,
    "table": _cmd_table,
    "quadrature": _cmd_quadrature,
    "verify": _cmd_verify,
    "asymptotics": _cmd_asymptotics,
}


def run(argv=None) -> int:
    """Parse argv, execute one command and map every outcome to exit code 0, 1 or 2."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e.error_message}", file=sys.stderr)
        return 2
    except DomainError as e:
        logger.error(str(e))
        print(f"error: {e.error_message}", file=sys.stderr)
        return 2
    except ValidationError as e:
        logger.error(str(e))
        print(f"error: invalid parameters\n{e}", file=sys.stderr)
        return 2
    except ComputationError as e:
        logger.error(str(e))
        print(f"computation failed: {e.error_message}", file=sys.stderr)
        return 1
    except GengegAnalysisException as e:
        logger.error(str(e))
        print(f"error: {e.error_message}", file=sys.stderr)
        return 1
    except Exception as e:
        logger.exception("unexpected failure")
        print(f"unexpected failure: {e}", file=sys.stderr)
        return 1


def main() -> None:
    configure_logging()
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
