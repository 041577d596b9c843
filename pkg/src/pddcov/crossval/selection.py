"""Tuning-parameter selection by cross-validation.

For every split the estimator is fitted on the training columns and scored
against the sample moment of the validation columns; losses are averaged
uniformly over all splits and the argmin is taken, ties resolving to the
smallest candidate.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

from pddcov.clime.config import ClimeConfig
from pddcov.clime.estimator import clime_estimate
from pddcov.core.errors import BadParam, IndefiniteEstimate, PddcovError
from pddcov.core.parallel import map_ordered
from pddcov.crossval.grid import TuningGrid
from pddcov.crossval.plan import GapBlockPlan, Split
from pddcov.linalg.matrix import SymmetricMatrix
from pddcov.moments.panel import TimeSeriesPanel
from pddcov.moments.sample import covariance_to_correlation, sample_covariance
from pddcov.spice.estimator import spice_estimate
from pddcov.spice.glasso import SpiceConfig
from pddcov.threshold.estimators import threshold_correlation, threshold_covariance
from pddcov.threshold.rules import ThresholdRule

logger = logging.getLogger(__name__)


class CvTarget(str, Enum):
    COVARIANCE = "covariance"
    CORRELATION = "correlation"

    @classmethod
    def parse(cls, text: str) -> CvTarget:
        aliases = {"cov": cls.COVARIANCE, "corr": cls.CORRELATION}
        key = text.strip().lower()
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise BadParam("target", text, "expected cov or corr") from None


class PrecisionMethod(str, Enum):
    CLIME = "clime"
    SPICE = "spice"


@dataclass(frozen=True)
class CvResult:
    """Selected value, the averaged loss per candidate and the plan digest."""

    selected: float
    curve: tuple[tuple[float, float], ...]
    plan_digest: str

    def to_dict(self) -> dict[str, object]:
        return {
            "selected": self.selected,
            "cv_curve": [
                {"value": value, "loss": loss if math.isfinite(loss) else None}
                for value, loss in self.curve
            ],
            "plan_digest": self.plan_digest,
        }


def _argmin(grid: TuningGrid, losses: NDArray[np.float64], plan: GapBlockPlan) -> CvResult:
    mean = np.mean(losses, axis=0)
    if not np.any(np.isfinite(mean)):
        logger.warning("every candidate has infinite CV loss; selecting the smallest")
    best = int(np.argmin(mean))
    return CvResult(
        selected=grid.values[best],
        curve=tuple((value, float(loss)) for value, loss in zip(grid.values, mean)),
        plan_digest=plan.digest(),
    )


def _moments(
    panel: TimeSeriesPanel, split: Split
) -> tuple[SymmetricMatrix, SymmetricMatrix]:
    return sample_covariance(panel.columns(split.training)), sample_covariance(
        panel.columns(split.validation)
    )


def select_tau(
    panel: TimeSeriesPanel,
    plan: GapBlockPlan,
    grid: TuningGrid,
    rule: ThresholdRule,
    target: CvTarget | str = CvTarget.COVARIANCE,
    threads: int | None = None,
) -> CvResult:
    """Select the threshold ``τ`` minimising the averaged squared Frobenius loss.

    The loss of split ``i`` at ``τ`` is ``‖S_τ(Σ̂**_i) − Σ̂*_i‖_F²`` with
    ``Σ̂**`` from the training and ``Σ̂*`` from the validation columns; the
    correlation target uses ``R̂**`` and ``R̂*`` instead.
    """
    target = CvTarget(target)
    if plan.n != panel.n:
        raise BadParam("plan", plan.n, f"plan covers {plan.n} points, panel has {panel.n}")

    def split_losses(split: Split) -> NDArray[np.float64]:
        train, valid = _moments(panel, split)
        if target is CvTarget.CORRELATION:
            train, valid = covariance_to_correlation(train), covariance_to_correlation(valid)
            shrink = threshold_correlation
        else:
            shrink = threshold_covariance
        return np.array(
            [
                float(np.sum((shrink(train, tau, rule).values - valid.values) ** 2))
                for tau in grid.values
            ]
        )

    losses = np.vstack(map_ordered(split_losses, plan.splits, threads))
    result = _argmin(grid, losses, plan)
    logger.info("CV selected tau=%g (%s, %s)", result.selected, rule.kind.value, target.value)
    return result


def precision_loss(omega: SymmetricMatrix, sigma: SymmetricMatrix) -> float:
    """``tr(Ω Σ) − log det Ω``; ``inf`` when ``Ω`` is not positive definite."""
    try:
        factor, _ = scipy.linalg.cho_factor(omega.values, check_finite=False)
    except scipy.linalg.LinAlgError:
        return math.inf
    logdet = 2.0 * float(np.sum(np.log(np.diag(factor))))
    return float(np.sum(omega.values * sigma.values)) - logdet


def select_lambda_precision(
    panel: TimeSeriesPanel,
    plan: GapBlockPlan,
    grid: TuningGrid,
    method: PrecisionMethod | str,
    method_cfg: ClimeConfig | SpiceConfig | None = None,
    threads: int | None = None,
) -> CvResult:
    """Select ``λ₁`` (CLIME) or ``λ₂`` (SPICE) by validation likelihood loss.

    A ``(split, λ)`` pair whose estimate is indefinite, or whose solver
    fails, contributes ``+inf`` and a warning; selection continues.

    Parameters
    ----------
    method_cfg:
        Template configuration; its penalty is replaced by each grid value.
    """
    method = PrecisionMethod(method)
    grid.require_positive()
    first = grid.values[0]
    if method is PrecisionMethod.CLIME:
        template: ClimeConfig | SpiceConfig = (
            method_cfg if isinstance(method_cfg, ClimeConfig) else ClimeConfig(lambda1=first)
        )
    else:
        template = (
            method_cfg if isinstance(method_cfg, SpiceConfig) else SpiceConfig(lambda2=first)
        )

    def fit(train: SymmetricMatrix, n_train: int, value: float) -> SymmetricMatrix:
        if isinstance(template, ClimeConfig):
            return clime_estimate(
                train, replace(template, lambda1=value), n=n_train, threads=1
            ).precision
        return spice_estimate(train, replace(template, lambda2=value)).precision

    def split_losses(indexed: tuple[int, Split]) -> NDArray[np.float64]:
        index, split = indexed
        train, valid = _moments(panel, split)
        row = np.empty(len(grid))
        for k, value in enumerate(grid.values):
            try:
                omega = fit(train, int(split.training.size), value)
                loss = precision_loss(omega, valid)
                if not math.isfinite(loss):
                    raise IndefiniteEstimate(split=index, value=value)
            except PddcovError as exc:
                logger.warning("CV split %d at %g scored +inf: %s", index, value, exc)
                loss = math.inf
            logger.debug("CV split %d %s=%g loss %.6g", index, method.value, value, loss)
            row[k] = loss
        return row

    losses = np.vstack(map_ordered(split_losses, list(enumerate(plan.splits)), threads))
    result = _argmin(grid, losses, plan)
    logger.info("CV selected %s lambda=%g", method.value, result.selected)
    return result
