"""Simulation models and the long-memory Gaussian generator."""
from __future__ import annotations

from pddcov.simulate.expfit import ExpSumFit, fit_exp_sum
from pddcov.simulate.generator import (
    SimulationManifest,
    empirical_cross_correlation,
    simulate_iid,
    simulate_panel,
    simulate_pdd,
)
from pddcov.simulate.models import ModelMatrices, ModelSpec, build_model

__all__ = [
    "ExpSumFit",
    "ModelMatrices",
    "ModelSpec",
    "SimulationManifest",
    "build_model",
    "empirical_cross_correlation",
    "fit_exp_sum",
    "simulate_iid",
    "simulate_panel",
    "simulate_pdd",
]
