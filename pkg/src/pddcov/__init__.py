"""pddcov — large covariance, correlation and precision estimation for
time series with polynomially decaying (possibly long-memory) dependence.

Public API
----------
The stable public surface is everything exported from this module.
Anything inside submodules not re-exported here is considered private
and may change without notice.

Example
-------
::

    import pddcov

    # Simulate Model 2 with long memory
    panel, manifest = pddcov.simulate(model=2, p=50, n=400, alpha=0.5, seed=7)

    # Hard-thresholded correlation, tau chosen by gap-block CV
    estimate = pddcov.estimate_covariance(panel, rule="hard")

    # CLIME precision matrix
    omega = pddcov.estimate_precision(panel, method="clime")

    # Rates, block size and dependence budget
    pddcov.rates(n=200, p=100, alpha=0.5)

    pddcov.__version__
    '0.1.0'
"""
from __future__ import annotations

from typing import TYPE_CHECKING, Any

__version__: str = "0.1.0"

if TYPE_CHECKING:
    from numpy.typing import ArrayLike

    from pddcov.estimators.base import Estimate, FitContext
    from pddcov.moments.panel import TimeSeriesPanel
    from pddcov.simulate.generator import SimulationManifest


def _panel(data: TimeSeriesPanel | ArrayLike) -> TimeSeriesPanel:
    from pddcov.moments.panel import TimeSeriesPanel

    return data if isinstance(data, TimeSeriesPanel) else TimeSeriesPanel(data)


def _context(
    panel: TimeSeriesPanel, method: str, tuning: float | None, seed: int, **extra: Any
) -> FitContext:
    from pddcov.crossval.plan import make_plan
    from pddcov.estimators.base import FitContext

    needs_plan = tuning is None and method not in ("sample", "sample_cov", "sample_inverse")
    plan = make_plan(panel.n, seed=seed) if needs_plan else None
    return FitContext(plan=plan, tuning=tuning, **extra)


def estimate_covariance(
    data: TimeSeriesPanel | ArrayLike,
    rule: str = "hard",
    target: str = "corr",
    tau: float | None = None,
    seed: int = 0,
) -> Estimate:
    """Thresholded correlation (or covariance) matrix of a ``p × n`` panel.

    Parameters
    ----------
    data:
        A ``TimeSeriesPanel`` or an array with one series per row.
    rule:
        ``hard``, ``soft``, ``scad`` or ``alasso``; ``sample`` returns the
        untouched sample correlation.
    target:
        ``corr`` thresholds ``R̂``, ``cov`` thresholds ``Σ̂``.
    tau:
        Fixed threshold; ``None`` selects it by gap-block cross-validation.
    seed:
        Seed of the cross-validation plan.

    Returns
    -------
    Estimate
        The matrix, its kind, the tuning value and the CV curve.
    """
    from pddcov.crossval.selection import CvTarget
    from pddcov.estimators.builtin import get_estimator

    panel = _panel(data)
    ctx = _context(panel, rule, tau, seed, threshold_target=CvTarget.parse(target))
    return get_estimator(rule).fit(panel, ctx)


def estimate_precision(
    data: TimeSeriesPanel | ArrayLike,
    method: str = "clime",
    penalty: float | None = None,
    seed: int = 0,
) -> Estimate:
    """CLIME or SPICE precision matrix of a ``p × n`` panel.

    ``penalty`` is ``λ₁`` for CLIME and ``λ₂`` for SPICE; ``None`` selects
    it by gap-block cross-validation on the validation likelihood.
    """
    from pddcov.estimators.builtin import get_estimator

    panel = _panel(data)
    return get_estimator(method).fit(panel, _context(panel, method, penalty, seed))


def simulate(
    model: int,
    p: int,
    n: int,
    alpha: float | str,
    seed: int = 0,
    n_terms: int = 8,
) -> tuple[TimeSeriesPanel, SimulationManifest]:
    """Simulate Model ``model`` with decay exponent ``alpha`` (``"iid"`` allowed)."""
    from pddcov.pdd_rates.formulas import parse_alpha
    from pddcov.simulate.generator import simulate_panel
    from pddcov.simulate.models import ModelSpec

    return simulate_panel(ModelSpec(model, p), n, parse_alpha(alpha), seed, n_terms=n_terms)


def rates(n: int, p: int, alpha: float | str, m_p: float = 1.0) -> dict[str, float]:
    """``τ′``, ``λ′``, the block size ``f`` and the budget ``g`` (with ``C₀ = 1``)."""
    from pddcov.pdd_rates.formulas import (
        PddSpec,
        RateInput,
        block_size_f,
        g_bound,
        lambda_prime,
        parse_alpha,
        tau_prime,
    )

    inp = RateInput(n=n, p=p, alpha=parse_alpha(alpha), m_p=m_p)
    f = block_size_f(inp)
    return {
        "tau_prime": tau_prime(inp),
        "lambda_prime": lambda_prime(inp),
        "f": float(f),
        "g": g_bound(n, f, PddSpec(inp.alpha)),
    }


__all__ = [
    "__version__",
    "estimate_covariance",
    "estimate_precision",
    "rates",
    "simulate",
]
