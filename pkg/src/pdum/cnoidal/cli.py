"""Command-line interface: ``pdum_cnoidal <command> [options]``.

Every command builds an :class:`~pdum.cnoidal.types.OutputRecord` and writes it as JSON (default)
or CSV to stdout or ``--out``. Logging and error panels go to stderr.

Exit codes: 0 on success, 1 on a numerical or domain failure (including a residual above
``--tol``), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel

from pdum.cnoidal.basis import elliptic_form, eval_grid, representation_used
from pdum.cnoidal.coefficients import (
    F_sum,
    coeff_table,
    e_ell,
    product_identity_rows,
    verify_convolution,
    verify_identity,
)
from pdum.cnoidal.projection import basis_threshold, project
from pdum.cnoidal.solvers import (
    apply_freedoms,
    integrated_residual,
    kdv_speed_poisson,
    ode_coefficient_residuals,
    pde_residual,
    solve_kawahara,
    solve_kdv,
)
from pdum.cnoidal.types.constants import CLI_TOL, MIN_PROJECTION_GRID
from pdum.cnoidal.types.exceptions import CnoidalError, DomainError
from pdum.cnoidal.types.param import CnoidalParam, EllipticConvention, RepPolicy, SeriesRep
from pdum.cnoidal.types.projection import ProjectionSolver
from pdum.cnoidal.types.record import OutputRecord
from pdum.cnoidal.types.series import SingularConvention

logger = logging.getLogger("pdum.cnoidal")

_EVAL_REPS = [policy.cli_name for policy in RepPolicy]
_SUM_REPS = [rep.cli_name for rep in SeriesRep]
_ELLIPTIC_CONVENTIONS = {"squared": EllipticConvention.SQUARED_SINE, "literal": EllipticConvention.LITERAL_SINE}


def _grid(size: int) -> np.ndarray:
    return 2.0 * math.pi * np.arange(size) / size


# ---------------------------------------------------------------------------------------------
# commands


def cmd_eval(args: argparse.Namespace) -> OutputRecord:
    """Evaluate ``u_s^(n)`` on a uniform grid or on explicit points."""

    param = CnoidalParam(args.s, RepPolicy.from_cli_name(args.rep))
    if args.grid < 1:
        raise DomainError(f"--grid must be positive, got {args.grid}")
    x = np.asarray(args.x, dtype=np.float64) if args.x else _grid(args.grid)
    convention = _ELLIPTIC_CONVENTIONS[args.convention]
    used = representation_used(param, args.n)
    if used is RepPolicy.ELLIPTIC:
        values = elliptic_form(param, x, convention=convention)
    else:
        values = eval_grid(param, x, args.n)

    diagnostics = [f"representation: {used.cli_name}"]
    if used is RepPolicy.ELLIPTIC:
        diagnostics.extend(param.modulus.warnings)
    return OutputRecord(
        command="eval",
        inputs={"s": args.s, "n": args.n, "rep": args.rep, "points": len(x)},
        results={"x": x, "u": values, "representation": used.cli_name},
        diagnostics=diagnostics,
        columns=("x", "u"),
        rows=list(zip(x.tolist(), values.tolist())),
    )


def cmd_coeffs(args: argparse.Namespace) -> OutputRecord:
    """Coefficients ``b(n)``, ``c`` and the auxiliary sums for one product identity."""

    table = coeff_table(args.alpha, args.beta, args.s)
    return OutputRecord(
        command="coeffs",
        inputs={"alpha": args.alpha, "beta": args.beta, "s": args.s},
        results={
            "b": table.b,
            "a": table.a,
            "c": table.c,
            "leading": table.leading,
            "e": {f"e{ell}": value for ell, value in table.e_values.items()},
            "F": table.F_value,
        },
        columns=("n", "b", "a"),
        rows=[(n, bn, an) for n, (bn, an) in enumerate(zip(table.b, table.a))],
    )


def cmd_verify(args: argparse.Namespace) -> OutputRecord:
    """Check the product identity pointwise on a grid."""

    residual = verify_identity(args.alpha, args.beta, args.s, args.grid)
    return OutputRecord(
        command="verify",
        inputs={"alpha": args.alpha, "beta": args.beta, "s": args.s, "grid": args.grid, "tol": args.tol},
        results={"residual": residual, "passed": residual <= args.tol},
    )


def cmd_convolution(args: argparse.Namespace) -> OutputRecord:
    """Compare the brute-force convolution sum with its closed form."""

    convention = SingularConvention(args.convention)
    residual = verify_convolution(args.alpha, args.beta, args.j, args.s, args.K, convention=convention)
    return OutputRecord(
        command="convolution",
        inputs={
            "alpha": args.alpha,
            "beta": args.beta,
            "j": args.j,
            "s": args.s,
            "convention": convention,
            "tol": args.tol,
        },
        results={"residual": residual, "passed": residual <= args.tol},
    )


def cmd_kdv(args: argparse.Namespace) -> OutputRecord:
    """Cnoidal KdV wave, optionally shifted and rescaled."""

    wave = solve_kdv(args.alpha, args.s)
    coefficient_residuals = ode_coefficient_residuals(wave)
    if args.shift != 0.0 or args.scale != 1.0:
        wave = apply_freedoms(wave, args.shift, args.scale)
    return OutputRecord(
        command="kdv",
        inputs={"alpha": args.alpha, "s": args.s, "shift": args.shift, "scale": args.scale},
        results={
            "f1": wave.f1,
            "f2": wave.f2,
            "s": wave.s,
            "c": wave.c,
            "d": wave.d,
            "speed_poisson": kdv_speed_poisson(args.alpha, args.s),
            "residuals": {
                "pde": pde_residual(wave),
                "integrated": integrated_residual(wave),
                "coefficients": coefficient_residuals,
            },
        },
        diagnostics=list(wave.diagnostics),
    )


def cmd_kawahara(args: argparse.Namespace) -> OutputRecord:
    """Periodic Kawahara wave from the smallest root of the constraint."""

    wave = solve_kawahara(args.alpha, args.beta, tuple(args.bracket) if args.bracket else None)
    return OutputRecord(
        command="kawahara",
        inputs={"alpha": args.alpha, "beta": args.beta, "bracket": args.bracket},
        results={
            "f1": wave.f1,
            "f2": wave.f2,
            "s0": wave.s,
            "c": wave.c,
            "d": wave.d,
            "residuals": {
                "pde": pde_residual(wave),
                "integrated": integrated_residual(wave),
                "coefficients": ode_coefficient_residuals(wave),
            },
        },
        diagnostics=list(wave.diagnostics),
    )


def cmd_table(args: argparse.Namespace) -> OutputRecord:
    """The nine bundled low-order identities next to the general coefficient formulas."""

    rows = product_identity_rows(args.s)
    worst = max(row.max_deviation for row in rows)
    exact = all(row.leading_exact for row in rows)
    return OutputRecord(
        command="table",
        inputs={"s": args.s, "tol": args.tol},
        results={
            "identities": [
                {
                    "alpha": row.alpha,
                    "beta": row.beta,
                    "b": {
                        str(e.n): {"tag": e.tag, "expected": e.expected, "computed": e.computed}
                        for e in row.entries
                    },
                    "c": {"expected": row.c_expected, "computed": row.c_computed},
                    "leading_exact": row.leading_exact,
                }
                for row in rows
            ],
            "max_deviation": worst,
            "passed": exact and worst <= args.tol,
        },
        columns=("alpha", "beta", "n", "tag", "expected", "computed"),
        rows=[(row.alpha, row.beta, e.n, e.tag, e.expected, e.computed) for row in rows for e in row.entries],
    )


def cmd_sums(args: argparse.Namespace) -> OutputRecord:
    """Evaluate ``e_l`` or ``F_l`` in a chosen representation."""

    rep = SeriesRep.from_cli_name(args.rep)
    series = e_ell(args.s, args.ell, rep) if args.kind == "e" else F_sum(args.s, args.ell, rep)
    return OutputRecord(
        command="sums",
        inputs={"s": args.s, "ell": args.ell, "kind": args.kind, "rep": args.rep},
        results={
            "value": series.value,
            "representation": series.rep.cli_name,
            "terms_used": series.terms_used,
            "tail_bound": series.tail_bound,
        },
    )


def _read_target(path: Path) -> np.ndarray:
    """Read ``x,value`` samples (header row first) and check they sit on ``2 pi i / M``."""

    try:
        data = np.loadtxt(path, delimiter=",", skiprows=1, usecols=(0, 1), ndmin=2)
    except (OSError, ValueError) as e:
        raise DomainError(f"cannot read target samples from {path}: {e}") from e
    x, values = data[:, 0], data[:, 1]
    size = len(values)
    if size < MIN_PROJECTION_GRID or size & (size - 1):
        raise DomainError(f"target needs a power-of-two number of samples >= {MIN_PROJECTION_GRID}, got {size}")
    if not np.allclose(x, _grid(size), rtol=0.0, atol=1e-12):
        raise DomainError("target samples must be uniform on [0, 2pi) starting at 0")
    return values


def cmd_project(args: argparse.Namespace) -> OutputRecord:
    """Least-squares expansion of sampled data in ``{1, u_s, ..., u_s^(N)}``."""

    result = project(_read_target(args.target), args.s, args.N, solver=ProjectionSolver(args.solver))
    return OutputRecord(
        command="project",
        inputs={"target": str(args.target), "s": args.s, "N": args.N, "solver": args.solver},
        results={
            "coefficients": result.coeffs,
            "residual": result.l2_residual,
            "gram_condition": result.gram_condition,
            "solver": result.solver,
            "basis_threshold": basis_threshold(args.s),
        },
        diagnostics=list(result.warnings),
        columns=("term", "coefficient"),
        rows=[("1", result.coeffs[0])] + [(f"u^({n})", v) for n, v in enumerate(result.coeffs[1:])],
    )


# ---------------------------------------------------------------------------------------------
# parser


def _bracket(value: str) -> float:
    number = float(value)
    if not number > 0:
        raise argparse.ArgumentTypeError(f"bracket endpoints must be positive, got {value}")
    return number


def _positive(value: str) -> float:
    number = float(value)
    if not (math.isfinite(number) and number > 0):
        raise argparse.ArgumentTypeError(f"expected a positive finite number, got {value}")
    return number


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv"), default="json", help="output format (default: json)")
    parser.add_argument("--out", type=Path, default=None, help="write output to FILE instead of stdout")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")


def _build_parser() -> argparse.ArgumentParser:
    from pdum.cnoidal import __version__

    parser = argparse.ArgumentParser(prog="pdum_cnoidal", description="Cnoidal basis functions and exact waves.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[argparse.Namespace], OutputRecord], summary: str):
        p = sub.add_parser(name, help=summary, description=summary)
        p.set_defaults(handler=handler)
        _add_output_options(p)
        return p

    p = command("eval", cmd_eval, "evaluate u_s^(n)")
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--grid", type=int, default=64, help="uniform grid size on [0, 2pi) (default: 64)")
    p.add_argument("--x", type=float, nargs="+", default=None, help="explicit evaluation points")
    p.add_argument("--rep", choices=_EVAL_REPS, default="auto")
    p.add_argument("--convention", choices=sorted(_ELLIPTIC_CONVENTIONS), default="squared")

    p = command("coeffs", cmd_coeffs, "coefficients of u^(alpha) u^(beta)")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--s", type=_positive, required=True)

    p = command("verify", cmd_verify, "check the product identity on a grid")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--tol", type=float, default=CLI_TOL)

    p = command("convolution", cmd_convolution, "check the discrete convolution formula")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--K", type=int, default=None, help="half-width of the brute-force sum")
    p.add_argument("--convention", choices=[c.value for c in SingularConvention], default="limit")
    p.add_argument("--tol", type=float, default=CLI_TOL)

    p = command("kdv", cmd_kdv, "cnoidal wave of v_t + v v_z + alpha v_zzz = 0")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--shift", type=float, default=0.0, help="additive constant a")
    p.add_argument("--scale", type=float, default=1.0, help="spatial scale lambda")

    p = command("kawahara", cmd_kawahara, "periodic wave of v_t + v v_z + alpha v_zzz - beta v_zzzzz = 0")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--bracket", type=_bracket, nargs=2, metavar=("LO", "HI"), default=None)

    p = command("table", cmd_table, "bundled low-order identities against the general formulas")
    p.add_argument("--s", type=_positive, default=1.0)
    p.add_argument("--tol", type=float, default=CLI_TOL)

    p = command("sums", cmd_sums, "auxiliary sums e_l and F_l")
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--kind", choices=("e", "F"), default="e")
    p.add_argument("--rep", choices=_SUM_REPS, default="auto")

    p = command("project", cmd_project, "least-squares expansion of sampled data")
    p.add_argument("--target", type=Path, required=True, help="CSV with header and x,value columns")
    p.add_argument("--s", type=_positive, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--solver", choices=[solver.value for solver in ProjectionSolver], default="auto")

    return parser


# ---------------------------------------------------------------------------------------------
# entry point


def _configure_logging(console: Console, verbose: bool) -> None:
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)
    logger.addHandler(RichHandler(console=console, show_time=False, show_path=False))
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    logger.propagate = False


def _write(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return the exit code."""

    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    console = Console(stderr=True)
    _configure_logging(console, args.verbose)

    try:
        record = args.handler(args)
    except CnoidalError as e:
        console.print(Panel.fit(f"[red]{type(e).__name__}:[/red] {e}", title=args.command, border_style="red"))
        return 1

    _write(record.render(args.format), args.out)
    if record.diagnostics and args.verbose:
        console.print(Panel("\n".join(record.diagnostics), title="Diagnostics", border_style="cyan"))
    return 0 if record.results.get("passed", True) else 1


if __name__ == "__main__":
    raise SystemExit(main())
