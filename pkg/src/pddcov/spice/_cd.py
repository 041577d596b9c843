"""JIT-compiled lasso coordinate descent on a Gram matrix.

Falls back to plain Python when numba is not importable.
"""
from __future__ import annotations

import logging
from collections.abc import Callable
from typing import Any

import numpy as np
from numpy.typing import NDArray

logger = logging.getLogger(__name__)

try:
    from numba import jit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency

    def jit(*args: Any, **kwargs: Any) -> Any:  # type: ignore[no-redef]
        def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
            return func

        return decorator

    HAS_NUMBA = False
    logger.info("numba not available; graphical lasso runs in pure Python")


@jit(nopython=True, cache=True)
def lasso_cd(
    gram: NDArray[np.float64],
    target: NDArray[np.float64],
    coef: NDArray[np.float64],
    penalty: float,
    tol: float,
    max_iter: int,
) -> int:
    """Minimise ``½ bᵀ G b − tᵀ b + penalty·|b|₁`` in place.

    ``coef`` holds the warm start on entry and the solution on exit.
    Returns the number of sweeps used.
    """
    m = target.shape[0]
    grad = np.zeros(m)
    for k in range(m):
        acc = 0.0
        for j in range(m):
            acc += gram[k, j] * coef[j]
        grad[k] = acc
    sweeps = 0
    for sweep in range(max_iter):
        sweeps = sweep + 1
        max_change = 0.0
        for j in range(m):
            old = coef[j]
            partial = target[j] - grad[j] + gram[j, j] * old
            magnitude = abs(partial) - penalty
            new = 0.0
            if magnitude > 0.0:
                new = magnitude / gram[j, j]
                if partial < 0.0:
                    new = -new
            delta = new - old
            if delta != 0.0:
                for k in range(m):
                    grad[k] += gram[k, j] * delta
                coef[j] = new
                if abs(delta) > max_change:
                    max_change = abs(delta)
        if max_change < tol:
            break
    return sweeps
