"""Generalized thresholding of sample covariance and correlation matrices."""
from __future__ import annotations

from pddcov.threshold.estimators import threshold_correlation, threshold_covariance
from pddcov.threshold.rules import ThresholdKind, ThresholdRule, threshold_value

__all__ = [
    "ThresholdKind",
    "ThresholdRule",
    "threshold_correlation",
    "threshold_covariance",
    "threshold_value",
]
