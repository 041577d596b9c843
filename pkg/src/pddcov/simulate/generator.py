"""Gaussian panels with power-law temporal dependence.

Each observation is ``X_t = L Σ_i c_i Y_t^{(i)}`` where ``L`` is the
Cholesky factor of ``Σ`` and every ``Y^{(i)}`` is an independent
stationary AR(1) process with coefficient ``ρ_i = e^{−b_i}`` and unit
marginal variance.  The lag-``j`` cross-covariance is then
``Σ_i c_i² ρ_i^j Σ = ĥ(j+1)/ĥ(1) · Σ ≈ (j+1)^{−α} Σ``.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
import scipy.signal

from pddcov.core.errors import BadLag, DegenerateInput, ZeroVariance
from pddcov.core.rng import stream
from pddcov.linalg.matrix import DenseMatrix
from pddcov.moments.panel import TimeSeriesPanel
from pddcov.pdd_rates.formulas import is_iid
from pddcov.simulate.expfit import ExpSumFit, fit_exp_sum
from pddcov.simulate.models import ModelSpec, build_model

logger = logging.getLogger(__name__)

Seed = int | np.random.Generator


def _generator(seed: Seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else stream(seed)


def _cholesky(spec: ModelSpec) -> np.ndarray:
    return np.linalg.cholesky(build_model(spec).sigma.values)


@dataclass(frozen=True)
class SimulationManifest:
    """What produced a simulated panel."""

    model: int
    p: int
    n: int
    alpha: float
    seed: int | None
    fit: ExpSumFit | None

    def to_dict(self) -> dict[str, object]:
        return {
            "model": self.model,
            "p": self.p,
            "n": self.n,
            "alpha": "iid" if is_iid(self.alpha) else self.alpha,
            "seed": self.seed,
            "fit": self.fit.to_dict() if self.fit is not None else None,
        }


def simulate_iid(spec: ModelSpec, n: int, seed: Seed) -> TimeSeriesPanel:
    """Independent ``N(0, Σ)`` columns."""
    if n < 2:
        raise DegenerateInput(n=n, minimum=2)
    rng = _generator(seed)
    return TimeSeriesPanel(_cholesky(spec) @ rng.standard_normal((spec.p, n)))


def simulate_pdd(spec: ModelSpec, fit: ExpSumFit, n: int, seed: Seed) -> TimeSeriesPanel:
    """AR(1)-mixture panel whose cross-correlations decay like ``(j+1)^{−α}``.

    Parameters
    ----------
    spec:
        Model and dimension; ``Σ`` is the marginal covariance of every ``X_t``.
    fit:
        Exponential-sum fit of ``x^{−α}``; its ``c_i`` are normalised so
        ``Σ c_i² = 1``.
    n:
        Number of time points.
    seed:
        Integer seed or a ``numpy.random.Generator``.
    """
    if n < 2:
        raise DegenerateInput(n=n, minimum=2)
    rng = _generator(seed)
    coefficients = fit.coefficients()
    mixture = np.zeros((spec.p, n))
    for c, b in zip(coefficients, fit.rates):
        if c == 0.0:
            continue
        rho = math.exp(-b)
        shocks = rng.standard_normal((spec.p, n))
        shocks[:, 1:] *= math.sqrt(1.0 - rho * rho)
        mixture += c * scipy.signal.lfilter([1.0], [1.0, -rho], shocks, axis=1)
    logger.debug(
        "simulated model %d p=%d n=%d alpha=%g with %d active terms",
        spec.model,
        spec.p,
        n,
        fit.alpha,
        int(np.count_nonzero(coefficients)),
    )
    return TimeSeriesPanel(_cholesky(spec) @ mixture)


def simulate_panel(
    spec: ModelSpec,
    n: int,
    alpha: float,
    seed: Seed,
    n_terms: int = 8,
    tol: float = 0.05,
) -> tuple[TimeSeriesPanel, SimulationManifest]:
    """Simulate i.i.d. data when ``alpha`` is the i.i.d. sentinel, else a PDD panel."""
    seed_value = seed if isinstance(seed, int) else None
    if is_iid(alpha):
        panel = simulate_iid(spec, n, seed)
        return panel, SimulationManifest(spec.model, spec.p, n, alpha, seed_value, None)
    fit = fit_exp_sum(alpha, n, n_terms=n_terms, tol=tol)
    panel = simulate_pdd(spec, fit, n, seed)
    return panel, SimulationManifest(spec.model, spec.p, n, alpha, seed_value, fit)


def empirical_cross_correlation(panel: TimeSeriesPanel, lag: int) -> DenseMatrix:
    """Lag-``lag`` sample cross-correlation matrix.

    Entry ``(k, l)`` is ``(1/n) Σ_t (x_{k,t} − x̄_k)(x_{l,t+lag} − x̄_l)``
    divided by ``√(σ̂_kk σ̂_ll)``; lag 0 reproduces the sample correlation.

    Raises
    ------
    BadLag
        Unless ``0 <= lag <= n − 2``.
    """
    n = panel.n
    if not 0 <= lag <= n - 2:
        raise BadLag(lag=lag, minimum=0, maximum=n - 2)
    centred = panel.data - panel.data.mean(axis=1, keepdims=True)
    variances = np.sum(centred * centred, axis=1) / n
    for index, variance in enumerate(variances):
        if not variance > 0.0:
            raise ZeroVariance(index=index, variance=float(variance))
    cross = centred[:, : n - lag] @ centred[:, lag:].T / n
    scale = 1.0 / np.sqrt(variances)
    return DenseMatrix(cross * scale[:, np.newaxis] * scale[np.newaxis, :])
