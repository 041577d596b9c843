"""Reproducible random streams.

Streams are derived from a root seed plus a tuple of integer keys
(replication index, purpose, ...) through ``numpy.random.SeedSequence``,
so every unit of work owns an independent generator and results do not
depend on how work is scheduled across threads.
"""
from __future__ import annotations

import numpy as np

# Stream purposes, used as the last spawn key.
SIMULATION = 0
CV_PLAN = 1


def stream(seed: int, *keys: int) -> np.random.Generator:
    """Return the generator for ``(seed, *keys)``.

    Example
    -------
    ::

        rng = stream(7, replication, SIMULATION)
        z = rng.standard_normal((p, n))
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=keys))


def derive_seed(seed: int, *keys: int) -> int:
    """Return a child integer seed for APIs that take a plain seed."""
    return int(stream(seed, *keys).integers(0, 2**31 - 1))
