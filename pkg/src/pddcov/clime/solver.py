"""Column solvers for ``min |β|₁  s.t.  |Σ̃β − e_i|_∞ <= λ₁``.

The ADMM solver works on the split form

    min |w|₁   s.t.   Σ̃β − z = e_i,   β − w = 0,   |z|_∞ <= λ₁

with scaled duals ``u`` (for the first constraint) and ``v`` (for the
second).  Both quadratic penalties share the step ``ρ``, so the
β-update always solves with ``Σ̃² + I`` and one Cholesky factor serves
every column and every ``ρ``.  Columns are processed as a block of
right-hand sides, each with its own ``ρ``; a column is frozen at the
first iteration where its primal and dual residuals and the feasibility
excess of ``w`` are all below ``tol``.
"""
from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np
import scipy.linalg
import scipy.optimize
from numpy.typing import NDArray

from pddcov.core.errors import Infeasible, NotConverged
from pddcov.linalg.matrix import SymmetricMatrix

logger = logging.getLogger(__name__)

# Relative eigenvalue level treated as zero by the infeasibility certificate.
NULL_RTOL: float = 1e-12

_BALANCE_EVERY = 10
_BALANCE_RATIO = 10.0


def _soft(x: NDArray[np.float64], kappa: NDArray[np.float64] | float) -> NDArray[np.float64]:
    return np.maximum(0.0, x - kappa) - np.maximum(0.0, -x - kappa)


def factor(sigma: SymmetricMatrix) -> tuple[NDArray[np.float64], bool]:
    """Cholesky factor of ``Σ̃² + I`` in ``scipy.linalg.cho_solve`` form."""
    s = sigma.values
    return scipy.linalg.cho_factor(s @ s + np.eye(sigma.dim))


def infeasibility_bound(sigma: SymmetricMatrix, columns: Sequence[int]) -> NDArray[np.float64]:
    """Certified lower bounds on ``min_β |Σ̃β − e_i|_∞`` per column.

    ``Σ̃β`` lies in the range of ``Σ̃``, so the residual keeps the null-space
    component of ``e_i`` and ``|r|_∞ >= |P_null e_i|₂ / √p``.  The bound is
    zero when ``Σ̃`` is nonsingular.
    """
    eigenvalues, eigenvectors = np.linalg.eigh(sigma.values)
    scale = float(np.max(np.abs(eigenvalues)))
    null = np.abs(eigenvalues) <= NULL_RTOL * max(scale, 1e-300)
    if not np.any(null):
        return np.zeros(len(columns))
    basis = eigenvectors[:, null]
    rows = basis[np.asarray(columns, dtype=np.intp), :]
    return np.linalg.norm(rows, axis=1) / math.sqrt(sigma.dim)


def check_feasible(sigma: SymmetricMatrix, columns: Sequence[int], lambda1: float) -> None:
    """Raise ``Infeasible`` for the first column whose bound exceeds ``λ₁``."""
    bounds = infeasibility_bound(sigma, columns)
    for column, bound in zip(columns, bounds):
        if bound > lambda1:
            raise Infeasible(column=int(column), lambda1=lambda1, lower_bound=float(bound))


def min_residual(sigma: SymmetricMatrix, column: int) -> float:
    """Exact ``min_β |Σ̃β − e_i|_∞`` by linear programming.

    The column is feasible exactly when this value is ``<= λ₁``.
    """
    s = sigma.values
    p = sigma.dim
    target = np.zeros(p)
    target[column] = 1.0
    ones = np.ones((p, 1))
    # variables [β, t]
    solution = scipy.optimize.linprog(
        c=np.concatenate([np.zeros(p), [1.0]]),
        A_ub=np.block([[s, -ones], [-s, -ones]]),
        b_ub=np.concatenate([target, -target]),
        bounds=[(None, None)] * p + [(0.0, None)],
        method="highs",
    )
    if solution.status != 0:
        raise NotConverged(solver="clime-lp", max_iter=0, final_gap=math.nan, column=column)
    return float(solution.x[-1])


def solve_columns_admm(
    sigma: SymmetricMatrix,
    chol: tuple[NDArray[np.float64], bool],
    columns: Sequence[int],
    lambda1: float,
    tol: float,
    max_iter: int,
) -> tuple[NDArray[np.float64], NDArray[np.int64]]:
    """Solve a block of CLIME columns by ADMM.

    Parameters
    ----------
    sigma:
        The perturbed covariance ``Σ̃``.
    chol:
        ``factor(sigma)``.
    columns:
        Column indices to solve.
    lambda1, tol, max_iter:
        Constraint level, residual tolerance and iteration cap.

    Returns
    -------
    tuple
        ``(betas, iterations)`` with ``betas`` of shape ``(p, len(columns))``.

    Raises
    ------
    Infeasible
        If a column still open after ``max_iter`` iterations has no feasible
        point; the exact LP residual decides.
    NotConverged
        If a feasible column is still open after ``max_iter`` iterations.
    """
    s = sigma.values
    p, b = sigma.dim, len(columns)
    targets = np.zeros((p, b))
    targets[np.asarray(columns, dtype=np.intp), np.arange(b)] = 1.0

    w = np.zeros((p, b))
    z = np.clip(-targets, -lambda1, lambda1)
    u = np.zeros((p, b))
    v = np.zeros((p, b))
    rho = np.ones(b)

    result = np.zeros((p, b))
    iterations = np.zeros(b, dtype=np.int64)
    done = np.zeros(b, dtype=bool)
    primal = np.full(b, np.inf)
    dual = np.full(b, np.inf)

    for it in range(1, max_iter + 1):
        beta = scipy.linalg.cho_solve(chol, s @ (z + targets - u) + (w - v))
        s_beta = s @ beta
        z_old, w_old = z, w
        z = np.clip(s_beta - targets + u, -lambda1, lambda1)
        w = _soft(beta + v, 1.0 / rho)
        r_fit = s_beta - z - targets
        r_split = beta - w
        u = u + r_fit
        v = v + r_split

        primal = np.maximum(np.max(np.abs(r_fit), axis=0), np.max(np.abs(r_split), axis=0))
        dual = rho * np.max(np.abs(s @ (z - z_old) + (w - w_old)), axis=0)
        excess = np.maximum(np.max(np.abs(s @ w - targets), axis=0) - lambda1, 0.0)

        newly = ~done & (primal <= tol) & (dual <= tol) & (excess <= tol)
        if np.any(newly):
            result[:, newly] = w[:, newly]
            iterations[newly] = it
            done |= newly
            if np.all(done):
                logger.debug("ADMM block of %d columns converged in %d iterations", b, it)
                return result, iterations

        if it % _BALANCE_EVERY == 0:
            grow = primal > _BALANCE_RATIO * dual
            shrink = dual > _BALANCE_RATIO * primal
            step = np.where(grow, 2.0, np.where(shrink, 0.5, 1.0))
            rho = rho * step
            u = u / step
            v = v / step

    open_ = np.flatnonzero(~done)
    for index in open_:
        column = int(columns[index])
        residual = min_residual(sigma, column)
        if residual > lambda1:
            raise Infeasible(column=column, lambda1=lambda1, lower_bound=residual)
    first = int(open_[0])
    raise NotConverged(
        solver="clime-admm",
        max_iter=max_iter,
        final_gap=float(max(primal[first], dual[first])),
        column=int(columns[first]),
    )


def clime_column_lp(sigma: SymmetricMatrix, column: int, lambda1: float) -> NDArray[np.float64]:
    """Exact CLIME column by linear programming.

    Splits ``β = β⁺ − β⁻`` with ``β± >= 0`` and minimises ``Σ(β⁺ + β⁻)``
    under ``−λ₁ <= Σ̃(β⁺ − β⁻) − e_i <= λ₁`` with the HiGHS solver.

    Raises
    ------
    Infeasible
        If the LP has no feasible point.
    """
    s = sigma.values
    p = sigma.dim
    target = np.zeros(p)
    target[column] = 1.0
    a_ub = np.block([[s, -s], [-s, s]])
    b_ub = np.concatenate([lambda1 + target, lambda1 - target])
    solution = scipy.optimize.linprog(
        c=np.ones(2 * p),
        A_ub=a_ub,
        b_ub=b_ub,
        bounds=(0, None),
        method="highs",
    )
    if solution.status == 2:
        bound = max(float(infeasibility_bound(sigma, [column])[0]), min_residual(sigma, column))
        raise Infeasible(column=column, lambda1=lambda1, lower_bound=bound)
    if solution.status != 0:
        raise NotConverged(solver="clime-lp", max_iter=0, final_gap=math.nan, column=column)
    x = solution.x
    return np.asarray(x[:p] - x[p:], dtype=np.float64)
