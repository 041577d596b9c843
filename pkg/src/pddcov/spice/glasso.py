"""SPICE: graphical lasso on the correlation matrix.

Minimises ``tr(KR) − log det K + λ₂ |K|₁,off`` by block coordinate descent
on the dual: each sweep visits every column, solves a lasso problem for the
regression coefficients of that column on the rest, and updates the
working covariance ``W`` (whose diagonal stays equal to that of ``R``).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from pddcov.core.errors import BadInput, BadParam, NotConverged, NotPositiveDefinite
from pddcov.linalg.matrix import SymmetricMatrix
from pddcov.spice._cd import lasso_cd

logger = logging.getLogger(__name__)

INNER_TOL: float = 1e-10
INNER_MAX_ITER: int = 1000

# Off-diagonal shrink of R for the "sample" starting point.
SAMPLE_INIT_SHRINK: float = 0.95


class SpiceInit(str, Enum):
    IDENTITY = "identity"
    SAMPLE = "sample"


@dataclass(frozen=True)
class SpiceConfig:
    """Parameters of the SPICE estimator.

    Parameters
    ----------
    lambda2:
        Off-diagonal ℓ1 penalty, ``> 0``.
    tol:
        Stop when the duality gap and the largest change of the working
        covariance over a sweep are both below ``tol``.
    max_iter:
        Maximum number of sweeps.
    init:
        ``identity`` or ``sample`` (0.95-shrunk correlation).
    """

    lambda2: float
    tol: float = 1e-6
    max_iter: int = 500
    init: SpiceInit = SpiceInit.IDENTITY

    def __post_init__(self) -> None:
        object.__setattr__(self, "init", SpiceInit(self.init))
        if not (self.lambda2 > 0.0 and math.isfinite(self.lambda2)):
            raise BadParam("lambda2", self.lambda2, "must be a positive finite number")
        if not self.tol > 0.0:
            raise BadParam("tol", self.tol, "must be > 0")
        if self.max_iter < 1:
            raise BadParam("max_iter", self.max_iter, "must be >= 1")


@dataclass(frozen=True)
class GlassoFit:
    """Result of ``glasso_corr``.

    ``covariance`` is the working matrix ``W``, which equals the inverse
    of ``concentration`` at convergence.
    """

    concentration: SymmetricMatrix
    covariance: SymmetricMatrix
    iterations: int
    duality_gap: float
    objective_history: tuple[float, ...]


def spice_objective(
    concentration: SymmetricMatrix, corr: SymmetricMatrix, lambda2: float
) -> float:
    """``tr(KR) − log det K + λ₂ |K|₁,off``.

    Raises
    ------
    NotPositiveDefinite
        If ``K`` is not positive definite.
    """
    k = concentration.values
    sign, logdet = np.linalg.slogdet(k)
    if sign <= 0:
        raise NotPositiveDefinite(min_eigenvalue=float(np.linalg.eigvalsh(k)[0]), what="K")
    off = float(np.sum(np.abs(k)) - np.sum(np.abs(np.diag(k))))
    return float(np.sum(k * corr.values)) - float(logdet) + lambda2 * off


def _duality_gap(k: NDArray[np.float64], r: NDArray[np.float64], lambda2: float) -> float:
    off = float(np.sum(np.abs(k)) - np.sum(np.abs(np.diag(k))))
    return float(np.sum(k * r)) - k.shape[0] + lambda2 * off


def _concentration(w: NDArray[np.float64], coefs: NDArray[np.float64]) -> NDArray[np.float64]:
    p = w.shape[0]
    k = np.zeros((p, p))
    for idx in range(p):
        others = np.arange(p) != idx
        theta = 1.0 / (w[idx, idx] - w[others, idx] @ coefs[others, idx])
        k[idx, idx] = theta
        k[others, idx] = -coefs[others, idx] * theta
    sym = (k + k.T) / 2.0
    # a zero in either triangle stays an exact zero
    sym[(k == 0.0) | (k.T == 0.0)] = 0.0
    return sym


def glasso_corr(corr: SymmetricMatrix, cfg: SpiceConfig) -> GlassoFit:
    """Graphical lasso with off-diagonal penalty on a unit-diagonal matrix.

    Parameters
    ----------
    corr:
        Correlation matrix ``R``; may be singular.
    cfg:
        Penalty and stopping rule.

    Returns
    -------
    GlassoFit

    Raises
    ------
    BadInput
        If ``R`` does not have unit diagonal.
    NotConverged
        If ``cfg.max_iter`` sweeps do not meet the stopping rule.
    """
    r = corr.values
    p = corr.dim
    if float(np.max(np.abs(np.diag(r) - 1.0))) > 1e-10:
        raise BadInput("glasso_corr expects a unit-diagonal correlation matrix")
    if p == 1:
        one = SymmetricMatrix.identity(1)
        return GlassoFit(one, one, 0, 0.0, (1.0,))

    if cfg.init is SpiceInit.SAMPLE:
        w = SAMPLE_INIT_SHRINK * r
        np.fill_diagonal(w, np.diag(r))
        start = np.linalg.inv(w)
        coefs = -start / np.diag(start)[np.newaxis, :]
        np.fill_diagonal(coefs, 0.0)
    else:
        w = np.eye(p)
        coefs = np.zeros((p, p))

    history: list[float] = []
    gap = math.inf
    indices = np.arange(p)
    for sweep in range(1, cfg.max_iter + 1):
        max_change = 0.0
        for idx in range(p):
            others = indices != idx
            gram = np.ascontiguousarray(w[np.ix_(others, others)])
            target = np.ascontiguousarray(r[others, idx])
            coef = np.ascontiguousarray(coefs[others, idx])
            lasso_cd(gram, target, coef, cfg.lambda2, INNER_TOL, INNER_MAX_ITER)
            updated = gram @ coef
            max_change = max(max_change, float(np.max(np.abs(updated - w[others, idx]))))
            w[others, idx] = updated
            w[idx, others] = updated
            coefs[others, idx] = coef

        k = _concentration(w, coefs)
        gap = _duality_gap(k, r, cfg.lambda2)
        try:
            history.append(spice_objective(SymmetricMatrix.from_upper(k), corr, cfg.lambda2))
        except NotPositiveDefinite:
            history.append(math.inf)
        logger.debug("glasso sweep %d: gap %.3e, max change %.3e", sweep, gap, max_change)
        if abs(gap) < cfg.tol and max_change < cfg.tol:
            return GlassoFit(
                concentration=SymmetricMatrix.from_upper(k),
                covariance=SymmetricMatrix.from_upper(w),
                iterations=sweep,
                duality_gap=gap,
                objective_history=tuple(history),
            )
    raise NotConverged(solver="spice", max_iter=cfg.max_iter, final_gap=gap)
