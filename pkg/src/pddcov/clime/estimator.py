"""CLIME precision estimator.

``clime_estimate`` perturbs the sample covariance, solves the ``p``
column problems, symmetrizes by keeping the entry of smaller magnitude and
optionally hard-thresholds the result.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from pddcov.clime.config import ClimeConfig, ClimeSolver
from pddcov.clime.solver import (
    check_feasible,
    clime_column_lp,
    factor,
    solve_columns_admm,
)
from pddcov.core.errors import BadParam
from pddcov.core.parallel import map_ordered
from pddcov.linalg.matrix import DenseMatrix, SymmetricMatrix

logger = logging.getLogger(__name__)

# Columns per ADMM block.  Fixed so results never depend on the worker count.
COLUMN_BLOCK: int = 32


@dataclass(frozen=True)
class ColumnSolution:
    """Solution of one CLIME column problem.

    ``residual`` is ``|Σ̃β − e_i|_∞`` at the returned ``beta``.
    """

    beta: NDArray[np.float64]
    residual: float
    iterations: int


@dataclass(frozen=True)
class ClimeFit:
    """Result of ``clime_estimate``."""

    precision: SymmetricMatrix
    raw: DenseMatrix
    epsilon: float
    lambda1: float
    max_residual: float
    iterations_per_column: tuple[int, ...]

    def sidecar(self) -> dict[str, object]:
        return {
            "lambda1": self.lambda1,
            "epsilon": self.epsilon,
            "max_residual": self.max_residual,
            "iterations_per_column": list(self.iterations_per_column),
        }


def perturb(sigma: SymmetricMatrix, epsilon: float) -> SymmetricMatrix:
    """``Σ̃_ε = S + εI``."""
    if not epsilon >= 0.0:
        raise BadParam("epsilon", epsilon, "must be >= 0")
    return SymmetricMatrix(sigma.values + epsilon * np.eye(sigma.dim))


def _residuals(
    sigma: SymmetricMatrix, betas: NDArray[np.float64], columns: list[int]
) -> NDArray[np.float64]:
    targets = np.zeros_like(betas)
    targets[columns, np.arange(len(columns))] = 1.0
    return np.max(np.abs(sigma.values @ betas - targets), axis=0)


def clime_column(
    sigma_eps: SymmetricMatrix,
    column: int,
    lambda1: float,
    cfg: ClimeConfig,
) -> ColumnSolution:
    """Solve ``min |β|₁  s.t.  |Σ̃_ε β − e_i|_∞ <= λ₁`` for one column.

    Raises
    ------
    Infeasible
        When a null-space certificate, or the exact LP residual once ADMM
        runs out of iterations, shows no β can meet ``λ₁``.
    NotConverged
        When the ADMM solver hits ``cfg.max_iter`` on a feasible column.
    """
    if not 0 <= column < sigma_eps.dim:
        raise BadParam("column", column, f"must lie in [0, {sigma_eps.dim - 1}]")
    if not lambda1 > 0.0:
        raise BadParam("lambda1", lambda1, "must be > 0")
    check_feasible(sigma_eps, [column], lambda1)
    if cfg.solver is ClimeSolver.LP:
        beta = clime_column_lp(sigma_eps, column, lambda1)
        iterations = 1
    else:
        betas, its = solve_columns_admm(
            sigma_eps, factor(sigma_eps), [column], lambda1, cfg.solver_tol, cfg.max_iter
        )
        beta, iterations = betas[:, 0], int(its[0])
    residual = float(_residuals(sigma_eps, beta[:, np.newaxis], [column])[0])
    return ColumnSolution(beta=beta, residual=residual, iterations=iterations)


def symmetrize_smaller(raw: DenseMatrix) -> SymmetricMatrix:
    """Symmetrize by keeping, for each pair, the entry of smaller magnitude.

    ``ω_ij = ω_ji = ω*_ij`` if ``|ω*_ij| <= |ω*_ji|`` else ``ω*_ji``; ties
    keep the upper-triangle entry.
    """
    values = raw.values
    if raw.rows != raw.cols:
        raise BadParam("raw", f"{raw.rows}x{raw.cols}", "must be square")
    upper_wins = np.abs(values) <= np.abs(values.T)
    chosen = np.where(upper_wins, values, values.T)
    return SymmetricMatrix.from_upper(chosen)


def clime_hard_threshold(omega: SymmetricMatrix, xi: float) -> SymmetricMatrix:
    """``ω̃_ij = ω_ij · 1(|ω_ij| > ξ)``."""
    if not xi >= 0.0:
        raise BadParam("xi", xi, "must be >= 0")
    values = omega.values
    return SymmetricMatrix.from_upper(np.where(np.abs(values) > xi, values, 0.0))


def clime_estimate(
    sigma: SymmetricMatrix,
    cfg: ClimeConfig,
    n: int | None = None,
    threads: int | None = None,
) -> ClimeFit:
    """CLIME estimate of the precision matrix.

    Parameters
    ----------
    sigma:
        Sample covariance ``Σ̂``.
    cfg:
        Estimator settings.
    n:
        Sample size, needed when ``cfg.epsilon`` is ``None``.
    threads:
        Worker cap for the column blocks; ``None`` uses the process default.

    Returns
    -------
    ClimeFit
    """
    epsilon = cfg.resolve_epsilon(n)
    sigma_eps = perturb(sigma, epsilon)
    p = sigma_eps.dim
    columns = list(range(p))
    check_feasible(sigma_eps, columns, cfg.lambda1)

    if cfg.solver is ClimeSolver.LP:
        betas_list = map_ordered(
            lambda i: clime_column_lp(sigma_eps, i, cfg.lambda1), columns, threads
        )
        betas = np.column_stack(betas_list)
        iterations = np.ones(p, dtype=np.int64)
    else:
        chol = factor(sigma_eps)
        blocks = [columns[start : start + COLUMN_BLOCK] for start in range(0, p, COLUMN_BLOCK)]
        solved = map_ordered(
            lambda block: solve_columns_admm(
                sigma_eps, chol, block, cfg.lambda1, cfg.solver_tol, cfg.max_iter
            ),
            blocks,
            threads,
        )
        betas = np.concatenate([block_betas for block_betas, _ in solved], axis=1)
        iterations = np.concatenate([its for _, its in solved])

    max_residual = float(np.max(_residuals(sigma_eps, betas, columns)))
    raw = DenseMatrix(betas)
    precision = symmetrize_smaller(raw)
    if cfg.xi is not None:
        precision = clime_hard_threshold(precision, cfg.xi)
    logger.debug(
        "CLIME p=%d lambda1=%g epsilon=%g max_residual=%.3e", p, cfg.lambda1, epsilon, max_residual
    )
    return ClimeFit(
        precision=precision,
        raw=raw,
        epsilon=epsilon,
        lambda1=cfg.lambda1,
        max_residual=max_residual,
        iterations_per_column=tuple(int(k) for k in iterations),
    )
