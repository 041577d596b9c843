"""SPICE precision estimate and partial correlations."""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from pddcov.core.errors import BadDiagonal
from pddcov.linalg.matrix import SymmetricMatrix
from pddcov.linalg.norms import min_eigenvalue
from pddcov.moments.sample import covariance_to_correlation
from pddcov.spice.glasso import SpiceConfig, glasso_corr

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpiceFit:
    """Result of ``spice_estimate``."""

    precision: SymmetricMatrix
    concentration: SymmetricMatrix
    lambda2: float
    iterations: int
    duality_gap: float
    min_eigenvalue: float

    def sidecar(self) -> dict[str, object]:
        return {
            "lambda2": self.lambda2,
            "iterations": self.iterations,
            "duality_gap": self.duality_gap,
            "min_eigenvalue": self.min_eigenvalue,
        }


def spice_estimate(sigma: SymmetricMatrix, cfg: SpiceConfig) -> SpiceFit:
    """SPICE estimate ``Ω̂ = Ŵ⁻¹ K̂ Ŵ⁻¹`` with ``Ŵ = diag(√σ̂_ii)``.

    Raises
    ------
    ZeroVariance
        If some ``σ̂_ii <= 0``.
    NotConverged
        Propagated from ``glasso_corr``.
    """
    corr = covariance_to_correlation(sigma)
    fit = glasso_corr(corr, cfg)
    scale = 1.0 / np.sqrt(sigma.diag())
    precision = SymmetricMatrix.from_upper(
        fit.concentration.values * scale[:, np.newaxis] * scale[np.newaxis, :]
    )
    smallest = min_eigenvalue(precision)
    logger.debug(
        "SPICE lambda2=%g sweeps=%d min eigenvalue %.3e", cfg.lambda2, fit.iterations, smallest
    )
    return SpiceFit(
        precision=precision,
        concentration=fit.concentration,
        lambda2=cfg.lambda2,
        iterations=fit.iterations,
        duality_gap=fit.duality_gap,
        min_eigenvalue=smallest,
    )


def partial_correlations(omega: SymmetricMatrix) -> SymmetricMatrix:
    """Partial correlations ``−ω_ij / √(ω_ii ω_jj)`` with unit diagonal.

    Raises
    ------
    BadDiagonal
        If some ``ω_ii <= 0``.
    """
    diagonal = omega.diag()
    for index, value in enumerate(diagonal):
        if not value > 0.0:
            raise BadDiagonal(index=index, value=float(value))
    scale = 1.0 / np.sqrt(diagonal)
    result = -omega.values * scale[:, np.newaxis] * scale[np.newaxis, :]
    np.fill_diagonal(result, 1.0)
    return SymmetricMatrix.from_upper(result)
