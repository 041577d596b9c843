"""Built-in estimators.

============== ======================================================
name           estimate
============== ======================================================
sample         sample correlation ``R̂``
sample_cov     sample covariance ``Σ̂``
hard, soft,    CV-tuned thresholding of ``R̂`` (or ``Σ̂``)
scad, alasso
sample_inverse ``Σ̂⁻¹``; raises ``SingularMatrix`` when ``p >= n``
clime          CV-tuned CLIME
spice          CV-tuned SPICE
============== ======================================================
"""
from __future__ import annotations

import logging
from dataclasses import replace

from pddcov.clime.config import ClimeConfig
from pddcov.clime.estimator import clime_estimate
from pddcov.core.errors import BadParam
from pddcov.crossval.selection import CvResult, CvTarget, select_lambda_precision, select_tau
from pddcov.estimators.base import Estimate, EstimateKind, Estimator, FitContext
from pddcov.estimators.registry import EstimatorRegistry
from pddcov.linalg.norms import inverse
from pddcov.moments.panel import TimeSeriesPanel
from pddcov.moments.sample import sample_correlation, sample_covariance
from pddcov.spice.estimator import spice_estimate
from pddcov.spice.glasso import SpiceConfig
from pddcov.threshold.estimators import threshold_correlation, threshold_covariance
from pddcov.threshold.rules import ThresholdKind, ThresholdRule

logger = logging.getLogger(__name__)

registry: EstimatorRegistry[Estimator] = EstimatorRegistry(Estimator)


def _require_plan(ctx: FitContext, name: str) -> None:
    if ctx.tuning is None and ctx.plan is None:
        raise BadParam("plan", None, f"{name} needs a CV plan or a fixed tuning value")


@registry.register("sample")
class SampleCorrelation(Estimator):
    name = "sample"

    def fit(self, panel: TimeSeriesPanel, ctx: FitContext) -> Estimate:
        return Estimate(sample_correlation(panel), EstimateKind.CORRELATION)


@registry.register("sample_cov")
class SampleCovariance(Estimator):
    name = "sample_cov"

    def fit(self, panel: TimeSeriesPanel, ctx: FitContext) -> Estimate:
        return Estimate(sample_covariance(panel), EstimateKind.COVARIANCE)


class ThresholdEstimator(Estimator):
    """Generalized thresholding with ``τ`` chosen by cross-validation."""

    kind: ThresholdKind = ThresholdKind.HARD

    def fit(self, panel: TimeSeriesPanel, ctx: FitContext) -> Estimate:
        _require_plan(ctx, self.name)
        rule = ThresholdRule(self.kind, scad_a=ctx.scad_a, al_eta=ctx.alasso_eta)
        target = ctx.threshold_target
        cv: CvResult | None = None
        if ctx.tuning is not None:
            tau = ctx.tuning
        else:
            assert ctx.plan is not None
            cv = select_tau(panel, ctx.plan, ctx.tau_grid, rule, target, threads=ctx.threads)
            tau = cv.selected
        if target is CvTarget.CORRELATION:
            matrix = threshold_correlation(sample_correlation(panel), tau, rule)
            kind = EstimateKind.CORRELATION
        else:
            matrix = threshold_covariance(sample_covariance(panel), tau, rule)
            kind = EstimateKind.COVARIANCE
        return Estimate(matrix, kind, tuning=tau, cv=cv, details={"tau": tau, "rule": self.name})


@registry.register("hard")
class HardThreshold(ThresholdEstimator):
    name = "hard"
    kind = ThresholdKind.HARD


@registry.register("soft")
class SoftThreshold(ThresholdEstimator):
    name = "soft"
    kind = ThresholdKind.SOFT


@registry.register("scad")
class ScadThreshold(ThresholdEstimator):
    name = "scad"
    kind = ThresholdKind.SCAD


@registry.register("alasso")
class AdaptiveLassoThreshold(ThresholdEstimator):
    name = "alasso"
    kind = ThresholdKind.ADAPTIVE_LASSO


@registry.register("sample_inverse")
class SampleInverse(Estimator):
    name = "sample_inverse"

    def fit(self, panel: TimeSeriesPanel, ctx: FitContext) -> Estimate:
        return Estimate(inverse(sample_covariance(panel)), EstimateKind.PRECISION)


@registry.register("clime")
class Clime(Estimator):
    name = "clime"

    def fit(self, panel: TimeSeriesPanel, ctx: FitContext) -> Estimate:
        _require_plan(ctx, self.name)
        cv: CvResult | None = None
        if ctx.tuning is not None:
            value = ctx.tuning
        else:
            assert ctx.plan is not None
            cv = select_lambda_precision(
                panel, ctx.plan, ctx.lambda_grid, "clime", ctx.clime, threads=ctx.threads
            )
            value = cv.selected
        template = ctx.clime if ctx.clime is not None else ClimeConfig(lambda1=value)
        fit = clime_estimate(sample_covariance(panel), replace(template, lambda1=value), n=panel.n)
        return Estimate(fit.precision, EstimateKind.PRECISION, value, cv, fit.sidecar())


@registry.register("spice")
class Spice(Estimator):
    name = "spice"

    def fit(self, panel: TimeSeriesPanel, ctx: FitContext) -> Estimate:
        _require_plan(ctx, self.name)
        cv: CvResult | None = None
        if ctx.tuning is not None:
            value = ctx.tuning
        else:
            assert ctx.plan is not None
            cv = select_lambda_precision(
                panel, ctx.plan, ctx.lambda_grid, "spice", ctx.spice, threads=ctx.threads
            )
            value = cv.selected
        template = ctx.spice if ctx.spice is not None else SpiceConfig(lambda2=value)
        fit = spice_estimate(sample_covariance(panel), replace(template, lambda2=value))
        return Estimate(fit.precision, EstimateKind.PRECISION, value, cv, fit.sidecar())


def get_estimator(name: str) -> Estimator:
    """Instantiate the estimator registered under ``name``."""
    return registry.get(name)()
