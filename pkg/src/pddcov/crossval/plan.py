"""Train/validation split plans.

Gap-block plan
--------------
Step 1 cuts the ``n`` time points into ``h1`` nearly equal contiguous
blocks.  Each block is a validation set; its training set is everything
except the block and its immediate neighbours.  Step 2 draws ``h2`` random
blocks of ``m = ⌈n/h1⌉`` consecutive points and trains on everything at
distance more than ``m`` from the block.  Random blocks may overlap.

K-fold plan
-----------
Ordinary shuffled K-fold, for independent observations.
"""
from __future__ import annotations

import hashlib
import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from pddcov.core.errors import BadParam, TooSmall
from pddcov.core.rng import stream

logger = logging.getLogger(__name__)

MIN_H1: int = 4


class PlanScheme(str, Enum):
    GAP_BLOCK = "gap_block"
    KFOLD = "kfold"


@dataclass(frozen=True, eq=False)
class Split:
    """Sorted, disjoint column indices for validation and training."""

    validation: NDArray[np.intp]
    training: NDArray[np.intp]

    def __post_init__(self) -> None:
        self.validation.setflags(write=False)
        self.training.setflags(write=False)


@dataclass(frozen=True, eq=False)
class GapBlockPlan:
    """A reproducible list of splits over ``n`` time points."""

    n: int
    h1: int
    h2: int
    seed: int
    splits: tuple[Split, ...]
    scheme: PlanScheme = PlanScheme.GAP_BLOCK

    def digest(self) -> str:
        """SHA-256 over the scheme, sizes and every split's indices."""
        h = hashlib.sha256()
        h.update(f"{self.scheme.value}:{self.n}:{self.h1}:{self.h2}".encode())
        for split in self.splits:
            h.update(b"|v")
            h.update(np.asarray(split.validation, dtype=np.int64).tobytes())
            h.update(b"|t")
            h.update(np.asarray(split.training, dtype=np.int64).tobytes())
        return h.hexdigest()

    def __len__(self) -> int:
        return len(self.splits)


def _complement(n: int, excluded: NDArray[np.bool_]) -> NDArray[np.intp]:
    return np.flatnonzero(~excluded).astype(np.intp)


def make_plan(n: int, h1: int = 10, h2: int = 10, seed: int = 0) -> GapBlockPlan:
    """Gap-block cross-validation plan.

    Raises
    ------
    TooSmall
        If ``h1 < 4``, ``n < 4·h1``, or a random split leaves fewer than two
        training points.
    BadParam
        If ``h2 < 0``.

    Example
    -------
    ::

        plan = make_plan(40, h1=4, h2=0)
        plan.splits[1].validation   # columns 10..19
        plan.splits[1].training     # columns 30..39
    """
    if h1 < MIN_H1 or n < 4 * h1:
        raise TooSmall(n=n, h1=h1)
    if h2 < 0:
        raise BadParam("h2", h2, "must be >= 0")

    splits: list[Split] = []
    blocks = np.array_split(np.arange(n, dtype=np.intp), h1)
    for index, block in enumerate(blocks):
        excluded = np.zeros(n, dtype=bool)
        for neighbour in (index - 1, index, index + 1):
            if 0 <= neighbour < h1:
                excluded[blocks[neighbour]] = True
        splits.append(Split(validation=block.copy(), training=_complement(n, excluded)))

    size = math.ceil(n / h1)
    rng = stream(seed)
    for _ in range(h2):
        start = int(rng.integers(0, n - size + 1))
        excluded = np.zeros(n, dtype=bool)
        excluded[max(0, start - size) : min(n, start + 2 * size)] = True
        training = _complement(n, excluded)
        if training.size < 2:
            raise TooSmall(n=n, h1=h1)
        validation = np.arange(start, start + size, dtype=np.intp)
        splits.append(Split(validation=validation, training=training))

    logger.debug("gap-block plan n=%d h1=%d h2=%d seed=%d", n, h1, h2, seed)
    return GapBlockPlan(n=n, h1=h1, h2=h2, seed=seed, splits=tuple(splits))


def make_kfold_plan(n: int, k: int = 10, seed: int = 0) -> GapBlockPlan:
    """Shuffled K-fold plan for independent observations.

    Raises
    ------
    BadParam
        If ``k < 2`` or ``n < 2k``.
    """
    if k < 2:
        raise BadParam("k", k, "must be >= 2")
    if n < 2 * k:
        raise BadParam("k", k, f"needs n >= {2 * k}, got n={n}")
    order = stream(seed).permutation(n)
    splits = []
    for fold in np.array_split(order, k):
        excluded = np.zeros(n, dtype=bool)
        excluded[fold] = True
        splits.append(
            Split(validation=np.sort(fold).astype(np.intp), training=_complement(n, excluded))
        )
    return GapBlockPlan(n=n, h1=k, h2=0, seed=seed, splits=tuple(splits), scheme=PlanScheme.KFOLD)


def plan_for(
    n: int,
    scheme: PlanScheme | str,
    *,
    iid: bool = False,
    h1: int = 10,
    h2: int = 10,
    k: int = 10,
    seed: int = 0,
) -> GapBlockPlan:
    """Build a plan by scheme name; ``"auto"`` picks K-fold for i.i.d. data."""
    if scheme == "auto":
        scheme = PlanScheme.KFOLD if iid else PlanScheme.GAP_BLOCK
    if PlanScheme(scheme) is PlanScheme.KFOLD:
        return make_kfold_plan(n, k=k, seed=seed)
    return make_plan(n, h1=h1, h2=h2, seed=seed)
