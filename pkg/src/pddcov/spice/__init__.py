"""SPICE: sparse precision estimation through the correlation matrix."""
from __future__ import annotations

from pddcov.spice.estimator import SpiceFit, partial_correlations, spice_estimate
from pddcov.spice.glasso import (
    GlassoFit,
    SpiceConfig,
    SpiceInit,
    glasso_corr,
    spice_objective,
)

__all__ = [
    "GlassoFit",
    "SpiceConfig",
    "SpiceFit",
    "SpiceInit",
    "glasso_corr",
    "partial_correlations",
    "spice_estimate",
    "spice_objective",
]
