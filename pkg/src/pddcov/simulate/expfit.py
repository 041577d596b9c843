"""Exponential-sum approximation of the power law ``h(x) = x^{−α}``.

The rates ``b_i`` are fixed on a geometric grid over ``[1/(10n), 5]`` and
the weights ``a_i >= 0`` come from nonnegative least squares on relative
error over a log-spaced grid of ``[1, n]``.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace

import numpy as np
import scipy.optimize
from numpy.typing import ArrayLike, NDArray

from pddcov.core.errors import BadParam, FitFailed

logger = logging.getLogger(__name__)

RATE_MAX: float = 5.0
FIT_POINTS: int = 400
CHECK_POINTS: int = 4000


@dataclass(frozen=True)
class ExpSumFit:
    """``ĥ(x) = Σ a_i exp(−b_i x)`` fitted to ``x^{−α}`` on ``[1, domain_n]``."""

    terms: tuple[tuple[float, float], ...]
    alpha: float
    domain_n: int
    max_rel_err: float

    @property
    def weights(self) -> NDArray[np.float64]:
        return np.array([a for a, _ in self.terms])

    @property
    def rates(self) -> NDArray[np.float64]:
        return np.array([b for _, b in self.terms])

    def evaluate(self, x: ArrayLike) -> NDArray[np.float64]:
        """``ĥ(x)`` elementwise."""
        points = np.asarray(x, dtype=np.float64)
        return np.sum(self.weights * np.exp(-np.multiply.outer(points, self.rates)), axis=-1)

    def raw_coefficients(self) -> NDArray[np.float64]:
        """``c_i = √(a_i e^{−b_i})`` before normalisation; ``Σ c_i² = ĥ(1)``."""
        return np.sqrt(self.weights * np.exp(-self.rates))

    @property
    def normalization(self) -> float:
        """Factor ``1/√(Σ c_i²)`` that makes the mixture's marginal covariance exact."""
        return 1.0 / math.sqrt(float(np.sum(self.raw_coefficients() ** 2)))

    def coefficients(self) -> NDArray[np.float64]:
        """Normalised ``c_i`` with ``Σ c_i² = 1``."""
        return self.raw_coefficients() * self.normalization

    def to_dict(self) -> dict[str, object]:
        return {
            "alpha": self.alpha,
            "domain_n": self.domain_n,
            "max_rel_err": self.max_rel_err,
            "normalization": self.normalization,
            "terms": [{"a": a, "b": b} for a, b in self.terms],
        }


def fit_exp_sum(alpha: float, n: int, n_terms: int = 8, tol: float = 0.05) -> ExpSumFit:
    """Fit ``x^{−α}`` on ``[1, n]`` by a sum of ``n_terms`` exponentials.

    Raises
    ------
    BadParam
        If ``alpha <= 0``, ``n < 2`` or ``n_terms < 2``.
    FitFailed
        If the maximum relative error on ``[1, n]`` exceeds ``tol``.

    Example
    -------
    ::

        fit = fit_exp_sum(1.0, 200)
        fit.evaluate(1.0)   # close to 1
    """
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise BadParam("alpha", alpha, "must be a positive finite number")
    if n < 2:
        raise BadParam("n", n, "must be >= 2")
    if n_terms < 2:
        raise BadParam("n_terms", n_terms, "must be >= 2")
    if not tol > 0.0:
        raise BadParam("tol", tol, "must be > 0")

    rates = np.geomspace(1.0 / (10.0 * n), RATE_MAX, n_terms)
    x = np.geomspace(1.0, float(n), FIT_POINTS)
    target = x ** (-alpha)
    design = np.exp(-np.multiply.outer(x, rates)) / target[:, np.newaxis]
    weights, _ = scipy.optimize.nnls(design, np.ones_like(x))

    fit = ExpSumFit(
        terms=tuple((float(a), float(b)) for a, b in zip(weights, rates)),
        alpha=float(alpha),
        domain_n=int(n),
        max_rel_err=math.nan,
    )
    check = np.geomspace(1.0, float(n), CHECK_POINTS)
    exact = check ** (-alpha)
    max_rel_err = float(np.max(np.abs(fit.evaluate(check) - exact) / exact))
    logger.debug(
        "exp-sum fit alpha=%g n=%d terms=%d max_rel_err=%.4g", alpha, n, n_terms, max_rel_err
    )
    if max_rel_err > tol:
        raise FitFailed(max_rel_err=max_rel_err, tol=tol)
    return replace(fit, max_rel_err=max_rel_err)
