"""Sample moments of a time-series panel with unknown mean."""
from __future__ import annotations

from pddcov.moments.panel import TimeSeriesPanel
from pddcov.moments.sample import (
    covariance_to_correlation,
    sample_autocorrelation,
    sample_correlation,
    sample_covariance,
)

__all__ = [
    "TimeSeriesPanel",
    "covariance_to_correlation",
    "sample_autocorrelation",
    "sample_correlation",
    "sample_covariance",
]
