"""Sample covariance, correlation and autocorrelation with unknown mean."""
from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

from pddcov.core.errors import BadInput, BadLag, DegenerateInput, ZeroVariance
from pddcov.linalg.matrix import SymmetricMatrix
from pddcov.moments.panel import TimeSeriesPanel


def sample_covariance(panel: TimeSeriesPanel) -> SymmetricMatrix:
    """Sample covariance with divisor ``n``.

    ``Σ̂ = (1/n) Σ_t (X_t − X̄)(X_t − X̄)ᵀ``, computed on centred data so
    the result is invariant to adding a constant vector to every column.

    Example
    -------
    ::

        >>> sample_covariance(TimeSeriesPanel([[1.0, 3.0]])).values
        array([[1.]])
    """
    centred = panel.data - panel.data.mean(axis=1, keepdims=True)
    return SymmetricMatrix.from_upper(centred @ centred.T / panel.n)


def covariance_to_correlation(sigma: SymmetricMatrix) -> SymmetricMatrix:
    """Scale a covariance matrix to unit diagonal.

    Raises
    ------
    ZeroVariance
        If any diagonal entry is not strictly positive.
    """
    variances = sigma.diag()
    for index, variance in enumerate(variances):
        if not variance > 0.0:
            raise ZeroVariance(index=index, variance=float(variance))
    scale = 1.0 / np.sqrt(variances)
    corr = sigma.values * scale[:, np.newaxis] * scale[np.newaxis, :]
    np.fill_diagonal(corr, 1.0)
    return SymmetricMatrix.from_upper(corr)


def sample_correlation(panel: TimeSeriesPanel) -> SymmetricMatrix:
    """Sample correlation matrix; the diagonal is exactly one."""
    return covariance_to_correlation(sample_covariance(panel))


def sample_autocorrelation(series: ArrayLike, max_lag: int) -> NDArray[np.float64]:
    """Biased sample autocorrelation ``ρ̂(0..max_lag)``.

    Every lag uses divisor ``n``: ``γ̂(t) = (1/n) Σ_{k<n−t} (x_k − x̄)(x_{k+t} − x̄)``
    and ``ρ̂(t) = γ̂(t)/γ̂(0)``.

    Returns
    -------
    numpy.ndarray
        Length ``max_lag + 1``; entry 0 is exactly 1.

    Raises
    ------
    BadLag
        Unless ``1 <= max_lag <= n − 1``.
    ZeroVariance
        If the series is constant.
    """
    x = np.asarray(series, dtype=np.float64)
    if x.ndim != 1:
        raise BadInput(f"series must be 1-D, got shape {x.shape}")
    n = x.shape[0]
    if n < 2:
        raise DegenerateInput(n=n, minimum=2)
    if not 1 <= max_lag <= n - 1:
        raise BadLag(lag=max_lag, minimum=1, maximum=n - 1)
    centred = x - x.mean()
    gamma0 = float(centred @ centred) / n
    if not gamma0 > 0.0:
        raise ZeroVariance(index=0, variance=gamma0)
    acf = np.empty(max_lag + 1)
    acf[0] = 1.0
    for lag in range(1, max_lag + 1):
        acf[lag] = float(centred[: n - lag] @ centred[lag:]) / n / gamma0
    return acf
