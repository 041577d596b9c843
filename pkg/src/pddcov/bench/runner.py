"""Replication harness.

Each replication simulates a panel from its own random stream, builds its
own CV plan, runs every configured method and scores the estimates
against the model truth.  Replications are independent, so they run
through ``map_ordered`` and the aggregate does not depend on the worker
count.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from rich.table import Table

from pddcov.bench.metrics import METRICS, EvalReport, MetricSummary, aggregate, evaluate
from pddcov.bench.report import result_table, write_result_csv
from pddcov.config.models import BenchConfig
from pddcov.core.errors import BenchAborted, PddcovError, SingularMatrix
from pddcov.core.parallel import map_ordered
from pddcov.core.rng import CV_PLAN, SIMULATION, derive_seed, stream
from pddcov.crossval.grid import TuningGrid
from pddcov.crossval.plan import plan_for
from pddcov.crossval.selection import CvTarget
from pddcov.estimators.base import EstimateKind, FitContext
from pddcov.estimators.builtin import get_estimator, registry
from pddcov.linalg.matrix import SymmetricMatrix
from pddcov.moments.panel import TimeSeriesPanel
from pddcov.simulate.expfit import ExpSumFit, fit_exp_sum
from pddcov.simulate.generator import simulate_iid, simulate_pdd
from pddcov.simulate.models import ModelMatrices, ModelSpec, build_model

logger = logging.getLogger(__name__)

# Share of failed replications at which a run is abandoned.
ABORT_FAILURE_RATE: float = 0.2


@dataclass(frozen=True)
class ReplicationFailure:
    """A method that raised during one replication."""

    replication: int
    method: str
    message: str


@dataclass(frozen=True)
class ReplicationOutcome:
    """Scores of every method in one replication; ``None`` marks N/A."""

    replication: int
    reports: dict[str, EvalReport | None]
    tuning: dict[str, float | None] = field(default_factory=dict)
    failures: tuple[ReplicationFailure, ...] = ()


@dataclass(frozen=True)
class BenchResult:
    """Aggregated benchmark output.

    ``summaries[method][metric]`` holds the mean and SD over replications
    in which the method produced a value for that metric.
    """

    config: BenchConfig
    methods: tuple[str, ...]
    summaries: dict[str, dict[str, MetricSummary]]
    outcomes: tuple[ReplicationOutcome, ...]
    failures: tuple[ReplicationFailure, ...]

    def summary(self, method: str, metric: str) -> MetricSummary:
        return self.summaries[method][metric]

    def failure_count(self, method: str) -> int:
        return sum(1 for failure in self.failures if failure.method == method)

    def to_csv(self, path: str | Path) -> None:
        write_result_csv(self, path)

    def render_table(self) -> Table:
        return result_table(self)


def truth_for(matrices: ModelMatrices, spec: ModelSpec, kind: EstimateKind) -> SymmetricMatrix:
    """The matrix an estimate of ``kind`` is scored against."""
    if kind is EstimateKind.PRECISION:
        return matrices.omega
    if kind is EstimateKind.COVARIANCE:
        return matrices.sigma
    return matrices.correlation


def support_known(spec: ModelSpec, kind: EstimateKind) -> bool:
    """True when the truth for ``kind`` is the sparse matrix the model defines."""
    if not spec.sparse_truth:
        return False
    return spec.defines_precision == (kind is EstimateKind.PRECISION)


def fit_context(cfg: BenchConfig, plan_seed: int, panel: TimeSeriesPanel) -> FitContext:
    plan = plan_for(
        panel.n,
        cfg.cv.scheme,
        iid=cfg.iid,
        h1=cfg.h1,
        h2=cfg.h2,
        k=cfg.cv.kfold,
        seed=plan_seed,
    )
    return FitContext(
        plan=plan,
        tau_grid=TuningGrid.log_spaced(cfg.cv.tau_min, cfg.cv.tau_max, cfg.cv.grid_size),
        lambda_grid=TuningGrid.log_spaced(cfg.cv.lambda_min, cfg.cv.lambda_max, cfg.cv.grid_size),
        threshold_target=CvTarget.parse(cfg.threshold_target),
        scad_a=cfg.scad_a,
        alasso_eta=cfg.alasso_eta,
        threads=1,
    )


def _simulate(
    cfg: BenchConfig, spec: ModelSpec, fit: ExpSumFit | None, rng: np.random.Generator
) -> TimeSeriesPanel:
    if fit is None:
        return simulate_iid(spec, cfg.n, rng)
    return simulate_pdd(spec, fit, cfg.n, rng)


def run_replication(
    cfg: BenchConfig,
    replication: int,
    fit: ExpSumFit | None = None,
) -> ReplicationOutcome:
    """Simulate, tune, estimate and score one replication.

    ``SingularMatrix`` from ``sample_inverse`` is reported as N/A; any
    other library error is recorded as a failure of that method.
    """
    spec = ModelSpec(cfg.model, cfg.p)
    matrices = build_model(spec)
    if fit is None and not cfg.iid:
        fit = fit_exp_sum(cfg.alpha, cfg.n, n_terms=cfg.n_terms, tol=cfg.fit_tol)
    panel = _simulate(cfg, spec, fit, stream(cfg.seed, replication, SIMULATION))
    ctx = fit_context(cfg, derive_seed(cfg.seed, replication, CV_PLAN), panel)
    reports: dict[str, EvalReport | None] = {}
    tuning: dict[str, float | None] = {}
    failures: list[ReplicationFailure] = []
    for method in cfg.resolved_methods():
        try:
            estimate = get_estimator(method).fit(panel, ctx)
        except SingularMatrix as exc:
            logger.debug("replication %d: %s not available (%s)", replication, method, exc)
            reports[method] = None
            continue
        except PddcovError as exc:
            logger.warning("replication %d: %s failed: %s", replication, method, exc)
            failures.append(ReplicationFailure(replication, method, str(exc)))
            continue
        reports[method] = evaluate(
            estimate.matrix,
            truth_for(matrices, spec, estimate.kind),
            support_known(spec, estimate.kind),
        )
        tuning[method] = estimate.tuning
    return ReplicationOutcome(replication, reports, tuning, tuple(failures))


def _summaries(
    methods: tuple[str, ...], outcomes: list[ReplicationOutcome]
) -> dict[str, dict[str, MetricSummary]]:
    table: dict[str, dict[str, MetricSummary]] = {}
    for method in methods:
        table[method] = {}
        for metric in METRICS:
            values = []
            for outcome in outcomes:
                report = outcome.reports.get(method)
                value = report.metric(metric) if report is not None else None
                values.append(np.nan if value is None else value)
            table[method][metric] = aggregate(values)
    return table


def run_benchmark(cfg: BenchConfig, threads: int | None = None) -> BenchResult:
    """Run ``cfg.replications`` replications and aggregate mean(SD) per metric.

    Parameters
    ----------
    cfg:
        Validated benchmark configuration.
    threads:
        Worker cap for the replications; ``None`` uses the process default.
        Results are bit-identical for every value.

    Raises
    ------
    UnknownMethod
        If a configured method is not registered.
    BenchAborted
        When at least 20% of the replications had a failing method.
    """
    methods = cfg.resolved_methods()
    for method in methods:
        registry.get(method)
    fit = None
    if not cfg.iid:
        fit = fit_exp_sum(cfg.alpha, cfg.n, n_terms=cfg.n_terms, tol=cfg.fit_tol)
    logger.info(
        "benchmark model %d p=%d n=%d alpha=%g: %d replications of %s",
        cfg.model,
        cfg.p,
        cfg.n,
        cfg.alpha,
        cfg.replications,
        ", ".join(methods),
    )
    outcomes = map_ordered(
        lambda r: run_replication(cfg, r, fit), range(cfg.replications), threads
    )
    failures = tuple(f for outcome in outcomes for f in outcome.failures)
    failed = sum(1 for outcome in outcomes if outcome.failures)
    if failed and failed >= ABORT_FAILURE_RATE * cfg.replications:
        raise BenchAborted(
            failures=failed,
            replications=cfg.replications,
            messages=tuple(f"{f.method}: {f.message}" for f in failures),
        )
    return BenchResult(
        config=cfg,
        methods=methods,
        summaries=_summaries(methods, outcomes),
        outcomes=tuple(outcomes),
        failures=failures,
    )
