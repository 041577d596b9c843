"""JSON run configuration: schemas and loader."""
from __future__ import annotations

from pddcov.config.loader import SEED_ENV, load_config, parse_config
from pddcov.config.models import DEFAULT_METHODS, BenchConfig, CvSettings, EstimateConfig

__all__ = [
    "DEFAULT_METHODS",
    "SEED_ENV",
    "BenchConfig",
    "CvSettings",
    "EstimateConfig",
    "load_config",
    "parse_config",
]
