"""Empirical decay exponent from sample autocorrelations.

Fits ``log|ρ̂(t)| = log C − α log t`` by ordinary least squares over
``t = 1..max_lag``; lags with ``|ρ̂(t)| < 1e-8`` are dropped.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike

from pddcov.core.errors import BadLag, TooFewLags
from pddcov.moments.panel import TimeSeriesPanel
from pddcov.moments.sample import sample_autocorrelation

logger = logging.getLogger(__name__)

MIN_ABS_CORRELATION: float = 1e-8
MIN_LAGS: int = 3


class AlphaMode(str, Enum):
    PER_SERIES = "per_series"
    ENVELOPE = "envelope"


@dataclass(frozen=True)
class PowerLawFit:
    """``|ρ(t)| ≈ c · t^{−α}`` over ``lags_used`` lags."""

    alpha: float
    c: float
    lags_used: int


@dataclass(frozen=True)
class AlphaEstimate:
    """Result of ``estimate_alpha``.

    ``alpha_hat``/``c_hat`` summarise the panel: the envelope fit, or in
    per-series mode the fit with the smallest ``α̂`` (strongest dependence).
    """

    alpha_hat: float
    c_hat: float
    mode: AlphaMode
    max_lag: int
    series: tuple[PowerLawFit, ...] = ()

    def to_dict(self) -> dict[str, object]:
        return {
            "alpha_hat": self.alpha_hat,
            "c_hat": self.c_hat,
            "mode": self.mode.value,
            "max_lag": self.max_lag,
            "series": [
                {"alpha": s.alpha, "c": s.c, "lags_used": s.lags_used} for s in self.series
            ],
        }


def fit_power_law(acf: ArrayLike) -> PowerLawFit:
    """OLS fit of ``log|ρ(t)|`` on ``log t``.

    Parameters
    ----------
    acf:
        Autocorrelations indexed by lag; entry 0 (lag zero) is ignored.

    Raises
    ------
    TooFewLags
        If fewer than three lags survive the ``1e-8`` floor.
    """
    values = np.abs(np.asarray(acf, dtype=np.float64))[1:]
    lags = np.arange(1, values.shape[0] + 1, dtype=np.float64)
    keep = values >= MIN_ABS_CORRELATION
    if int(np.count_nonzero(keep)) < MIN_LAGS:
        raise TooFewLags(usable=int(np.count_nonzero(keep)), minimum=MIN_LAGS)
    slope, intercept = np.polyfit(np.log(lags[keep]), np.log(values[keep]), deg=1)
    return PowerLawFit(
        alpha=float(-slope), c=float(math.exp(intercept)), lags_used=int(keep.sum())
    )


def estimate_alpha(
    panel: TimeSeriesPanel,
    max_lag: int,
    mode: AlphaMode | str = AlphaMode.ENVELOPE,
) -> AlphaEstimate:
    """Estimate the decay exponent of a panel.

    Parameters
    ----------
    panel:
        The observations.
    max_lag:
        Largest lag in the fit, ``>= 3``.
    mode:
        ``per_series`` fits every series separately; ``envelope`` fits the
        lag-wise maximum of ``|ρ̂_i(t)|`` over series.
    """
    mode = AlphaMode(mode)
    if max_lag < MIN_LAGS or max_lag > panel.n - 1:
        raise BadLag(lag=max_lag, minimum=MIN_LAGS, maximum=panel.n - 1)
    acfs = np.vstack([sample_autocorrelation(panel.series(i), max_lag) for i in range(panel.p)])
    if mode is AlphaMode.ENVELOPE:
        fit = fit_power_law(np.max(np.abs(acfs), axis=0))
        logger.debug("envelope fit alpha=%.4f c=%.4f", fit.alpha, fit.c)
        return AlphaEstimate(alpha_hat=fit.alpha, c_hat=fit.c, mode=mode, max_lag=max_lag)
    fits = tuple(fit_power_law(row) for row in acfs)
    strongest = min(fits, key=lambda fit: fit.alpha)
    return AlphaEstimate(
        alpha_hat=strongest.alpha,
        c_hat=strongest.c,
        mode=mode,
        max_lag=max_lag,
        series=fits,
    )
