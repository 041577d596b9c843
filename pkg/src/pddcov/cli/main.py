"""CLI entry point for pddcov.

Invoked as::

    pddcov [OPTIONS] COMMAND [ARGS]...

or, during development::

    python -m pddcov.cli.main

Commands
--------
simulate    Simulate a panel from one of the four models
estimate    Estimate a correlation, covariance or precision matrix
cv          Run cross-validation only and report the loss curve
bench       Run a replication benchmark from a JSON config
rates       Print the rate formulas, block size and dependence budget
alpha-fit   Estimate the decay exponent of a panel
version     Show version information

Exit codes: 0 on success, 1 on a usage or configuration error (including an
unregistered method name), 2 when the computation itself fails (a JSON
diagnostic is written to stderr).
"""
from __future__ import annotations

import json
import logging
import sys
from collections.abc import Sequence
from typing import TYPE_CHECKING, Any

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from pddcov.cli.manifest import RunManifest, file_digest, finalize_outputs, utc_now, write_json
from pddcov.core.errors import PddcovError, SchemaError, UnknownMethod

if TYPE_CHECKING:
    from pddcov.config.models import EstimateConfig
    from pddcov.crossval.grid import TuningGrid
    from pddcov.estimators.base import FitContext
    from pddcov.moments.panel import TimeSeriesPanel

console = Console()
err_console = Console(stderr=True)

logger = logging.getLogger(__name__)

THRESHOLD_METHODS = ("hard", "soft", "scad", "alasso")
PRECISION_METHODS = ("clime", "spice")


def _emit_json(data: dict[str, Any]) -> None:
    click.echo(json.dumps(data, indent=2, default=str))


def _start_manifest(
    command: str, config: dict[str, Any], seed: int | None, inputs: Sequence[str] = ()
) -> RunManifest:
    from pddcov import __version__

    return RunManifest(
        command=command,
        config=config,
        seed=seed,
        version=__version__,
        input_digests={path: file_digest(path) for path in inputs},
        started=utc_now(),
    )


def _load_panel(path: str, transpose: bool) -> TimeSeriesPanel:
    from pddcov.moments.panel import TimeSeriesPanel

    return TimeSeriesPanel.from_csv(path, transpose=transpose)


def _grids(cfg: EstimateConfig) -> tuple[TuningGrid, TuningGrid]:
    from pddcov.crossval.grid import TuningGrid

    if cfg.grid.strip().lower() != "auto":
        grid = TuningGrid.parse(cfg.grid)
        return grid, grid
    return (
        TuningGrid.log_spaced(cfg.cv.tau_min, cfg.cv.tau_max, cfg.cv.grid_size),
        TuningGrid.log_spaced(cfg.cv.lambda_min, cfg.cv.lambda_max, cfg.cv.grid_size),
    )


def _fit_context(cfg: EstimateConfig, panel: TimeSeriesPanel) -> FitContext:
    """Translate a validated ``EstimateConfig`` into a ``FitContext``."""
    from pddcov.clime.config import ClimeConfig
    from pddcov.crossval.plan import plan_for
    from pddcov.crossval.selection import CvTarget
    from pddcov.estimators.base import FitContext

    tau_grid, lambda_grid = _grids(cfg)
    plan = None
    if cfg.tuning is None:
        plan = plan_for(
            panel.n, cfg.cv.scheme, h1=cfg.h1, h2=cfg.h2, k=cfg.cv.kfold, seed=cfg.seed
        )
    clime = None
    if cfg.method == "clime":
        clime = ClimeConfig(
            lambda1=cfg.tuning or lambda_grid.values[-1],
            epsilon=cfg.epsilon,
            xi=cfg.xi,
            solver=cfg.solver,
        )
    return FitContext(
        plan=plan,
        tau_grid=tau_grid,
        lambda_grid=lambda_grid,
        threshold_target=CvTarget.parse(cfg.target),
        scad_a=cfg.scad_a,
        alasso_eta=cfg.alasso_eta,
        tuning=cfg.tuning,
        clime=clime,
    )


def _configure_logging(verbose: bool) -> None:
    handler = RichHandler(console=err_console, show_path=False, show_time=False)
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[handler],
        force=True,
    )


# ---------------------------------------------------------------------------
# CLI group
# ---------------------------------------------------------------------------


@click.group()
@click.version_option(package_name="pddcov")
@click.option(
    "--threads",
    type=click.IntRange(min=1),
    default=None,
    help="Worker cap for every parallel stage (default: available CPUs).",
)
@click.option("--verbose", "-v", is_flag=True, default=False, help="Log at DEBUG level.")
def cli(threads: int | None, verbose: bool) -> None:
    """Covariance, correlation and precision estimation under long-memory dependence."""
    from pddcov.core.parallel import set_default_threads
    from pddcov.estimators.builtin import registry

    _configure_logging(verbose)
    set_default_threads(threads)
    registry.load_entrypoints()


# ---------------------------------------------------------------------------
# version command
# ---------------------------------------------------------------------------


@cli.command(name="version")
def version_command() -> None:
    """Show detailed version information."""
    from pddcov import __version__
    from pddcov.estimators.builtin import registry
    from pddcov.spice._cd import HAS_NUMBA

    table = Table(show_header=False, box=None)
    table.add_row("[bold]pddcov[/bold]", f"v{__version__}")
    table.add_row(
        "Python", f"{sys.version_info.major}.{sys.version_info.minor}.{sys.version_info.micro}"
    )
    table.add_row("Platform", sys.platform)
    table.add_row("numba", "yes" if HAS_NUMBA else "no (pure-Python fallback)")
    table.add_row("Methods", ", ".join(registry.names()))
    console.print(table)


# ---------------------------------------------------------------------------
# simulate command
# ---------------------------------------------------------------------------


@cli.command(name="simulate")
@click.option("--model", type=click.IntRange(1, 4), required=True, help="Model 1-4.")
@click.option("--p", "p", type=click.IntRange(min=2), required=True, help="Dimension.")
@click.option("--n", "n", type=click.IntRange(min=2), required=True, help="Time points.")
@click.option("--alpha", required=True, help="Decay exponent, or 'iid'/'inf'.")
@click.option("--seed", type=click.IntRange(min=0), default=0, envvar="PDDCOV_SEED",
              show_default=True, help="Root seed.")
@click.option("--n-terms", type=click.IntRange(min=2), default=8, show_default=True,
              help="Exponential-sum terms.")
@click.option("--fit-tol", type=float, default=0.05, show_default=True,
              help="Largest admissible relative fit error.")
@click.option("--out", required=True, type=click.Path(dir_okay=False),
              help="Panel CSV (p rows x n columns).")
def simulate_command(
    model: int, p: int, n: int, alpha: str, seed: int, n_terms: int, fit_tol: float, out: str
) -> None:
    """Simulate a Gaussian panel with power-law temporal dependence."""
    from pddcov.pdd_rates.formulas import parse_alpha
    from pddcov.simulate.generator import simulate_panel
    from pddcov.simulate.models import ModelSpec

    config = {"model": model, "p": p, "n": n, "alpha": alpha, "n_terms": n_terms,
              "fit_tol": fit_tol}
    manifest = _start_manifest("simulate", config, seed)
    panel, info = simulate_panel(
        ModelSpec(model, p), n, parse_alpha(alpha), seed, n_terms=n_terms, tol=fit_tol
    )
    panel.to_csv(out)
    finalize_outputs(manifest, out, info.to_dict())
    err_console.print(f"[green]Panel written to[/green] {out} ({p} x {n})")


# ---------------------------------------------------------------------------
# estimate command
# ---------------------------------------------------------------------------


@cli.command(name="estimate")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="JSON estimate configuration (replaces the flags below).")
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Panel CSV (p rows x n columns).")
@click.option("--transpose", is_flag=True, default=False, help="Input is n rows x p columns.")
@click.option("--method", default=None, help="Estimator name, e.g. hard, clime, spice.")
@click.option("--tau", type=float, default=None, help="Fixed threshold (skips CV).")
@click.option("--lambda1", type=float, default=None, help="Fixed CLIME penalty (skips CV).")
@click.option("--lambda2", type=float, default=None, help="Fixed SPICE penalty (skips CV).")
@click.option("--epsilon", default="auto", show_default=True,
              help="CLIME ridge, or 'auto' for n^(-1/2).")
@click.option("--xi", type=float, default=None, help="CLIME post-threshold.")
@click.option("--solver", type=click.Choice(["admm", "lp"]), default="admm", show_default=True)
@click.option("--target", type=click.Choice(["corr", "cov"]), default="corr", show_default=True,
              help="Threshold the sample correlation or covariance.")
@click.option("--scad-a", type=float, default=3.7, show_default=True)
@click.option("--alasso-eta", type=float, default=1.0, show_default=True)
@click.option("--h1", type=int, default=10, show_default=True, help="Contiguous CV blocks.")
@click.option("--h2", type=int, default=10, show_default=True, help="Random CV blocks.")
@click.option("--cv-scheme", type=click.Choice(["auto", "gap_block", "kfold"]), default="auto",
              show_default=True)
@click.option("--grid", default="auto", show_default=True,
              help="'auto' or comma-separated candidates.")
@click.option("--seed", type=int, default=0, show_default=True, help="CV plan seed.")
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="Output matrix CSV.")
def estimate_command(
    config_path: str | None,
    input_path: str | None,
    transpose: bool,
    method: str | None,
    tau: float | None,
    lambda1: float | None,
    lambda2: float | None,
    epsilon: str,
    xi: float | None,
    solver: str,
    target: str,
    scad_a: float,
    alasso_eta: float,
    h1: int,
    h2: int,
    cv_scheme: str,
    grid: str,
    seed: int,
    out: str,
) -> None:
    """Estimate a matrix from a panel and write it as CSV with a JSON sidecar."""
    from pddcov.config.loader import load_config, parse_config
    from pddcov.config.models import EstimateConfig
    from pddcov.estimators.builtin import get_estimator
    from pddcov.linalg.csvio import write_matrix_csv

    if config_path is not None:
        cfg = load_config(config_path)
        if not isinstance(cfg, EstimateConfig):
            raise SchemaError(key_path="method", message="estimate needs a config with 'method'")
    else:
        if input_path is None or method is None:
            raise click.UsageError(
                "either --config or both --input and --method are required",
                ctx=click.get_current_context(),
            )
        fixed = [value for value in (tau, lambda1, lambda2) if value is not None]
        if len(fixed) > 1:
            raise click.UsageError(
                "give at most one of --tau, --lambda1, --lambda2",
                ctx=click.get_current_context(),
            )
        document: dict[str, Any] = {
            "method": method,
            "input": input_path,
            "transpose": transpose,
            "tuning": fixed[0] if fixed else None,
            "epsilon": None if epsilon.strip().lower() == "auto" else epsilon,
            "xi": xi,
            "solver": solver,
            "grid": grid,
            "h1": h1,
            "h2": h2,
            "cv": {"scheme": cv_scheme},
            "target": target,
            "scad_a": scad_a,
            "alasso_eta": alasso_eta,
            "seed": seed,
        }
        cfg = parse_config(document)
        assert isinstance(cfg, EstimateConfig)

    estimator = get_estimator(cfg.method)
    manifest = _start_manifest("estimate", cfg.model_dump(), cfg.seed, inputs=[cfg.input])
    panel = _load_panel(cfg.input, cfg.transpose)
    panel.require_positive_variance()
    estimate = estimator.fit(panel, _fit_context(cfg, panel))
    write_matrix_csv(estimate.matrix, out)
    sidecar: dict[str, Any] = {
        "method": cfg.method,
        "kind": estimate.kind.value,
        "tuning": estimate.tuning,
        **estimate.details,
    }
    if estimate.cv is not None:
        sidecar["cv"] = estimate.cv.to_dict()
    finalize_outputs(manifest, out, sidecar)
    err_console.print(f"[green]{estimate.kind.value.capitalize()} written to[/green] {out}")


# ---------------------------------------------------------------------------
# cv command
# ---------------------------------------------------------------------------


@cli.command(name="cv")
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="Panel CSV (p rows x n columns).")
@click.option("--transpose", is_flag=True, default=False, help="Input is n rows x p columns.")
@click.option("--method", type=click.Choice(THRESHOLD_METHODS + PRECISION_METHODS),
              required=True)
@click.option("--target", type=click.Choice(["cov", "corr", "prec"]), default=None,
              help="Loss target (default: corr for thresholding, prec otherwise).")
@click.option("--h1", type=click.IntRange(min=4), default=10, show_default=True)
@click.option("--h2", type=click.IntRange(min=0), default=10, show_default=True)
@click.option("--cv-scheme", type=click.Choice(["gap_block", "kfold"]), default="gap_block",
              show_default=True)
@click.option("--kfold", type=click.IntRange(min=2), default=10, show_default=True)
@click.option("--grid", default="auto", show_default=True,
              help="'auto' or comma-separated candidates.")
@click.option("--seed", type=int, default=0, show_default=True, help="CV plan seed.")
@click.option("--scad-a", type=float, default=3.7, show_default=True)
@click.option("--alasso-eta", type=float, default=1.0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the JSON result here instead of stdout.")
def cv_command(
    input_path: str,
    transpose: bool,
    method: str,
    target: str | None,
    h1: int,
    h2: int,
    cv_scheme: str,
    kfold: int,
    grid: str,
    seed: int,
    scad_a: float,
    alasso_eta: float,
    out: str | None,
) -> None:
    """Cross-validate a tuning parameter and report the loss curve."""
    from pddcov.crossval.grid import TuningGrid
    from pddcov.crossval.plan import plan_for
    from pddcov.crossval.selection import select_lambda_precision, select_tau
    from pddcov.threshold.rules import ThresholdKind, ThresholdRule

    if method in PRECISION_METHODS and target not in (None, "prec"):
        raise click.BadParameter(
            f"{method} is tuned on the precision loss",
            ctx=click.get_current_context(),
            param_hint="--target",
        )
    if method in THRESHOLD_METHODS and target == "prec":
        raise click.BadParameter(
            "thresholding targets cov or corr",
            ctx=click.get_current_context(),
            param_hint="--target",
        )

    config = {"method": method, "target": target, "h1": h1, "h2": h2, "scheme": cv_scheme,
              "kfold": kfold, "grid": grid}
    manifest = _start_manifest("cv", config, seed, inputs=[input_path])
    panel = _load_panel(input_path, transpose)
    panel.require_positive_variance()
    plan = plan_for(panel.n, cv_scheme, h1=h1, h2=h2, k=kfold, seed=seed)
    candidates = TuningGrid.parse(grid)
    if method in PRECISION_METHODS:
        result = select_lambda_precision(panel, plan, candidates, method)
    else:
        rule = ThresholdRule(ThresholdKind.parse(method), scad_a=scad_a, al_eta=alasso_eta)
        threshold_target = "covariance" if target == "cov" else "correlation"
        result = select_tau(panel, plan, candidates, rule, threshold_target)
    data = result.to_dict()
    if out is None:
        _emit_json(data)
        return
    write_json(data, out)
    finalize_outputs(manifest, out)
    err_console.print(f"[green]CV result written to[/green] {out}")


# ---------------------------------------------------------------------------
# bench command
# ---------------------------------------------------------------------------


@cli.command(name="bench")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="JSON benchmark configuration.")
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="Results CSV.")
@click.option("--emit-table", is_flag=True, default=False, help="Print a mean(SD) table.")
def bench_command(config_path: str, out: str, emit_table: bool) -> None:
    """Run a replication benchmark and write plot-ready CSV."""
    from pddcov.bench.runner import run_benchmark
    from pddcov.config.loader import load_config
    from pddcov.config.models import BenchConfig

    cfg = load_config(config_path)
    if not isinstance(cfg, BenchConfig):
        raise SchemaError(key_path="method", message="bench needs a benchmark config")
    manifest = _start_manifest(
        "bench", cfg.model_dump(mode="json"), cfg.seed, inputs=[config_path]
    )
    result = run_benchmark(cfg)
    result.to_csv(out)
    failures = [
        {"replication": f.replication, "method": f.method, "message": f.message}
        for f in result.failures
    ]
    finalize_outputs(manifest, out, {"methods": list(result.methods), "failures": failures})
    if emit_table:
        console.print(result.render_table())
    err_console.print(f"[green]Results written to[/green] {out}")


# ---------------------------------------------------------------------------
# rates command
# ---------------------------------------------------------------------------


@cli.command(name="rates")
@click.option("--n", "n", type=click.IntRange(min=2), required=True, help="Sample size.")
@click.option("--p", "p", type=click.IntRange(min=2), required=True, help="Dimension.")
@click.option("--alpha", required=True, help="Decay exponent, or 'iid'/'inf'.")
@click.option("--mp", "m_p", type=float, default=1.0, show_default=True,
              help="l1 bound M_p of the precision matrix.")
@click.option("--c0", type=float, default=1.0, show_default=True, help="Decay constant C0.")
def rates_command(n: int, p: int, alpha: str, m_p: float, c0: float) -> None:
    """Print tau', lambda', the block size f and the budget g as JSON."""
    from pddcov.pdd_rates.formulas import (
        PddSpec,
        RateInput,
        block_size_f,
        g_bound,
        is_iid,
        lambda_prime,
        parse_alpha,
        tau_prime,
        tau_zero,
    )

    inp = RateInput(n=n, p=p, alpha=parse_alpha(alpha), m_p=m_p)
    f = block_size_f(inp)
    _emit_json(
        {
            "n": n,
            "p": p,
            "alpha": "iid" if is_iid(inp.alpha) else inp.alpha,
            "m_p": m_p,
            "tau_prime": tau_prime(inp),
            "lambda_prime": lambda_prime(inp),
            "f": f,
            "f_clime": block_size_f(inp, for_clime=True),
            "g": g_bound(n, f, PddSpec(inp.alpha, c0)),
            "tau_zero": tau_zero(n, p, f),
        }
    )


# ---------------------------------------------------------------------------
# alpha-fit command
# ---------------------------------------------------------------------------


@cli.command(name="alpha-fit")
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="Panel CSV (p rows x n columns).")
@click.option("--transpose", is_flag=True, default=False, help="Input is n rows x p columns.")
@click.option("--max-lag", type=int, required=True, help="Largest lag in the fit (>= 3).")
@click.option("--mode", type=click.Choice(["envelope", "per_series"]), default="envelope",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the JSON result here instead of stdout.")
def alpha_fit_command(
    input_path: str, transpose: bool, max_lag: int, mode: str, out: str | None
) -> None:
    """Estimate the decay exponent from sample autocorrelations."""
    from pddcov.pdd_rates.alpha_fit import estimate_alpha

    config = {"max_lag": max_lag, "mode": mode, "transpose": transpose}
    manifest = _start_manifest("alpha-fit", config, None, inputs=[input_path])
    estimate = estimate_alpha(_load_panel(input_path, transpose), max_lag, mode)
    if out is None:
        _emit_json(estimate.to_dict())
        return
    write_json(estimate.to_dict(), out)
    finalize_outputs(manifest, out)
    err_console.print(f"[green]Alpha estimate written to[/green] {out}")


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def dispatch(argv: Sequence[str] | None = None) -> int:
    """Run the CLI on ``argv`` and return the process exit code."""
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="pddcov",
                      standalone_mode=False)
    except click.UsageError as exc:
        if exc.ctx is not None:
            click.echo(exc.ctx.get_help(), err=True)
        click.echo(f"Error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except (SchemaError, UnknownMethod) as exc:
        click.echo(json.dumps(exc.details(), default=str), err=True)
        return 1
    except PddcovError as exc:
        logger.debug("command failed", exc_info=True)
        click.echo(json.dumps(exc.details(), default=str), err=True)
        return 2
    return rv if isinstance(rv, int) else 0


def main() -> None:
    """Console-script entry point."""
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
