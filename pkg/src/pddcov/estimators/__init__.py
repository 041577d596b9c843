"""Estimator interface, registry and built-in methods."""
from __future__ import annotations

from pddcov.estimators.base import Estimate, EstimateKind, Estimator, FitContext
from pddcov.estimators.builtin import get_estimator, registry
from pddcov.estimators.registry import ENTRYPOINT_GROUP, EstimatorRegistry

__all__ = [
    "ENTRYPOINT_GROUP",
    "Estimate",
    "EstimateKind",
    "Estimator",
    "EstimatorRegistry",
    "FitContext",
    "get_estimator",
    "registry",
]
