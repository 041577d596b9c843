"""Shared infrastructure: error hierarchy, worker pool, random streams."""
from __future__ import annotations

from pddcov.core.errors import PddcovError
from pddcov.core.parallel import default_threads, map_ordered, set_default_threads
from pddcov.core.rng import derive_seed, stream

__all__ = [
    "PddcovError",
    "default_threads",
    "derive_seed",
    "map_ordered",
    "set_default_threads",
    "stream",
]
