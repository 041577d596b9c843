"""Thresholded covariance and correlation estimators."""
from __future__ import annotations

import numpy as np

from pddcov.core.errors import BadInput
from pddcov.linalg.matrix import SymmetricMatrix
from pddcov.threshold.rules import ThresholdRule

# Allowed deviation of a correlation diagonal from one.
UNIT_DIAGONAL_ATOL: float = 1e-12


def threshold_covariance(
    sigma: SymmetricMatrix, tau: float, rule: ThresholdRule
) -> SymmetricMatrix:
    """``S_τ(Σ̂)``: apply ``s_τ`` to every entry, diagonal included."""
    return SymmetricMatrix.from_upper(rule.apply(sigma.values, tau))


def threshold_correlation(
    corr: SymmetricMatrix, tau: float, rule: ThresholdRule
) -> SymmetricMatrix:
    """``S_τ(R̂)``: threshold the off-diagonal entries; the diagonal stays one.

    Raises
    ------
    BadInput
        If ``corr`` does not have unit diagonal to within 1e-12.
    """
    deviation = float(np.max(np.abs(corr.diag() - 1.0)))
    if deviation > UNIT_DIAGONAL_ATOL:
        raise BadInput(f"correlation matrix diagonal deviates from 1 by {deviation:.3e}")
    result = rule.apply(corr.values, tau)
    np.fill_diagonal(result, 1.0)
    return SymmetricMatrix.from_upper(result)
