"""CLIME precision estimation by column-wise constrained ℓ1 minimization."""
from __future__ import annotations

from pddcov.clime.config import ClimeConfig, ClimeSolver
from pddcov.clime.estimator import (
    ClimeFit,
    ColumnSolution,
    clime_column,
    clime_estimate,
    clime_hard_threshold,
    perturb,
    symmetrize_smaller,
)
from pddcov.clime.solver import clime_column_lp, infeasibility_bound, min_residual

__all__ = [
    "ClimeConfig",
    "ClimeFit",
    "ClimeSolver",
    "ColumnSolution",
    "clime_column",
    "clime_column_lp",
    "clime_estimate",
    "clime_hard_threshold",
    "infeasibility_bound",
    "min_residual",
    "perturb",
    "symmetrize_smaller",
]
