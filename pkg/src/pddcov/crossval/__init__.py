"""Gap-block and K-fold cross-validation for tuning parameters."""
from __future__ import annotations

from pddcov.crossval.grid import TuningGrid
from pddcov.crossval.plan import (
    GapBlockPlan,
    PlanScheme,
    Split,
    make_kfold_plan,
    make_plan,
    plan_for,
)
from pddcov.crossval.selection import (
    CvResult,
    CvTarget,
    PrecisionMethod,
    precision_loss,
    select_lambda_precision,
    select_tau,
)

__all__ = [
    "CvResult",
    "CvTarget",
    "GapBlockPlan",
    "PlanScheme",
    "PrecisionMethod",
    "Split",
    "TuningGrid",
    "make_kfold_plan",
    "make_plan",
    "plan_for",
    "precision_loss",
    "select_lambda_precision",
    "select_tau",
]
