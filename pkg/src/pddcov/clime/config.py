"""CLIME configuration."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from pddcov.core.errors import BadParam


class ClimeSolver(str, Enum):
    ADMM = "admm"
    LP = "lp"


@dataclass(frozen=True)
class ClimeConfig:
    """Parameters of the CLIME estimator.

    Parameters
    ----------
    lambda1:
        Constraint level ``λ₁ > 0`` on ``|Σ̃β − e_i|_∞``.
    epsilon:
        Ridge perturbation ``ε >= 0`` added to the diagonal.  ``None``
        means ``n^{-1/2}``, which needs the sample size.
    xi:
        Optional hard threshold ``ξ >= 0`` applied after symmetrization.
    solver_tol:
        Residual tolerance of the column solver, in ``(0, 1e-3]``.
    max_iter:
        Iteration cap of the column solver.
    solver:
        ``admm`` (default) or ``lp`` (exact linear program via HiGHS).
    """

    lambda1: float
    epsilon: float | None = None
    xi: float | None = None
    solver_tol: float = 1e-7
    max_iter: int = 10_000
    solver: ClimeSolver = ClimeSolver.ADMM

    def __post_init__(self) -> None:
        object.__setattr__(self, "solver", ClimeSolver(self.solver))
        if not (self.lambda1 > 0.0 and math.isfinite(self.lambda1)):
            raise BadParam("lambda1", self.lambda1, "must be a positive finite number")
        if self.epsilon is not None and not self.epsilon >= 0.0:
            raise BadParam("epsilon", self.epsilon, "must be >= 0")
        if self.xi is not None and not self.xi >= 0.0:
            raise BadParam("xi", self.xi, "must be >= 0")
        if not 0.0 < self.solver_tol <= 1e-3:
            raise BadParam("solver_tol", self.solver_tol, "must lie in (0, 1e-3]")
        if self.max_iter < 1:
            raise BadParam("max_iter", self.max_iter, "must be >= 1")

    def resolve_epsilon(self, n: int | None) -> float:
        """Return ``ε``, defaulting to ``n^{-1/2}``."""
        if self.epsilon is not None:
            return self.epsilon
        if n is None or n < 1:
            raise BadParam("epsilon", None, "default n^(-1/2) needs the sample size n")
        return 1.0 / math.sqrt(n)
