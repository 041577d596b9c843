"""Worker pool helpers.

All concurrent work in pddcov goes through ``map_ordered``: results are
keyed by input position, never by completion order, so a run gives the
same answer at any worker count.
"""
from __future__ import annotations

import logging
import os
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from pddcov.core.errors import BadParam

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

_default_threads: int | None = None


def available_parallelism() -> int:
    """Return the number of CPUs usable by this process."""
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:  # pragma: no cover - non-Linux
        return max(1, os.cpu_count() or 1)


def set_default_threads(threads: int | None) -> None:
    """Set the process-wide worker cap (``None`` restores the default)."""
    global _default_threads
    if threads is not None and threads < 1:
        raise BadParam("threads", threads, "must be >= 1")
    _default_threads = threads
    logger.debug("Default worker count set to %s", threads)


def default_threads() -> int:
    """Return the current process-wide worker cap."""
    return _default_threads if _default_threads is not None else available_parallelism()


def map_ordered(
    fn: Callable[[T], R],
    items: Iterable[T],
    threads: int | None = None,
) -> list[R]:
    """Apply ``fn`` to every item, possibly concurrently, preserving order.

    Parameters
    ----------
    fn:
        The function to apply.  Must not mutate shared state.
    items:
        Inputs; materialised into a list first.
    threads:
        Worker count.  ``None`` uses ``default_threads()``; ``1`` runs
        inline without a pool.

    Returns
    -------
    list
        ``[fn(item) for item in items]``.  The first exception raised by
        any call propagates.
    """
    work = list(items)
    workers = min(threads if threads is not None else default_threads(), len(work))
    if workers <= 1:
        return [fn(item) for item in work]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, work))
