"""Estimator interface shared by the CLI and the benchmark harness."""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import ClassVar

from pddcov.clime.config import ClimeConfig
from pddcov.crossval.grid import TuningGrid
from pddcov.crossval.plan import GapBlockPlan
from pddcov.crossval.selection import CvResult, CvTarget
from pddcov.linalg.matrix import SymmetricMatrix
from pddcov.moments.panel import TimeSeriesPanel
from pddcov.spice.glasso import SpiceConfig


class EstimateKind(str, Enum):
    """What an estimate approximates."""

    CORRELATION = "correlation"
    COVARIANCE = "covariance"
    PRECISION = "precision"


@dataclass(frozen=True)
class FitContext:
    """Everything an estimator may need beyond the data.

    Parameters
    ----------
    plan:
        Cross-validation plan; required unless ``tuning`` is fixed.
    tau_grid, lambda_grid:
        Candidate thresholds and penalties.
    threshold_target:
        Whether thresholding acts on ``R̂`` or ``Σ̂``.
    tuning:
        A fixed tuning value that bypasses cross-validation.
    clime, spice:
        Templates for the precision estimators (penalty is overwritten).
    threads:
        Worker cap for the cross-validation splits.
    """

    plan: GapBlockPlan | None = None
    tau_grid: TuningGrid = field(default_factory=lambda: TuningGrid.log_spaced())
    lambda_grid: TuningGrid = field(default_factory=lambda: TuningGrid.log_spaced())
    threshold_target: CvTarget = CvTarget.CORRELATION
    scad_a: float = 3.7
    alasso_eta: float = 1.0
    tuning: float | None = None
    clime: ClimeConfig | None = None
    spice: SpiceConfig | None = None
    threads: int | None = None


@dataclass(frozen=True)
class Estimate:
    """An estimated matrix plus how it was tuned."""

    matrix: SymmetricMatrix
    kind: EstimateKind
    tuning: float | None = None
    cv: CvResult | None = None
    details: dict[str, object] = field(default_factory=dict)


class Estimator(ABC):
    """Base class of every registered method."""

    name: ClassVar[str] = ""

    @abstractmethod
    def fit(self, panel: TimeSeriesPanel, ctx: FitContext) -> Estimate:
        """Estimate from ``panel``."""
