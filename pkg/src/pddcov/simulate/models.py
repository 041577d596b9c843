"""Covariance and precision matrices of the four simulation models.

* Model 1: ``σ_ij = 0.6^{|i−j|}``
* Model 2: ``σ_ii = 1``, ``σ_{i,i±1} = 0.6``, ``σ_{i,i±2} = 0.3``, zero beyond
* Model 3: ``ω_ij = 0.6^{|i−j|}``
* Model 4: the Model 2 band used as ``Ω``
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from pddcov.core.errors import BadParam, NotPositiveDefinite
from pddcov.linalg.matrix import SymmetricMatrix
from pddcov.linalg.norms import inverse, is_positive_definite, min_eigenvalue
from pddcov.moments.sample import covariance_to_correlation

MODELS = (1, 2, 3, 4)


@dataclass(frozen=True)
class ModelSpec:
    """Model number and dimension."""

    model: int
    p: int

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise BadParam("model", self.model, "must be 1, 2, 3 or 4")
        minimum = 3 if self.model in (2, 4) else 2
        if self.p < minimum:
            raise BadParam("p", self.p, f"model {self.model} needs p >= {minimum}")

    @property
    def defines_precision(self) -> bool:
        """True for Models 3 and 4, which specify ``Ω`` directly."""
        return self.model in (3, 4)

    @property
    def sparse_truth(self) -> bool:
        """True when the defined matrix has off-diagonal zeros (Models 2 and 4)."""
        return self.model in (2, 4)


@dataclass(frozen=True)
class ModelMatrices:
    sigma: SymmetricMatrix
    omega: SymmetricMatrix

    @property
    def correlation(self) -> SymmetricMatrix:
        return covariance_to_correlation(self.sigma)


def _geometric(p: int) -> NDArray[np.float64]:
    distance = np.abs(np.subtract.outer(np.arange(p), np.arange(p)))
    return 0.6**distance


def _band(p: int) -> NDArray[np.float64]:
    distance = np.abs(np.subtract.outer(np.arange(p), np.arange(p)))
    values = np.zeros((p, p))
    values[distance == 0] = 1.0
    values[distance == 1] = 0.6
    values[distance == 2] = 0.3
    return values


def build_model(spec: ModelSpec) -> ModelMatrices:
    """Return ``Σ`` and ``Ω = Σ⁻¹`` for ``spec``.

    Raises
    ------
    NotPositiveDefinite
        If the defining matrix is not positive definite.
    """
    defining = SymmetricMatrix(_geometric(spec.p) if spec.model in (1, 3) else _band(spec.p))
    if not is_positive_definite(defining):
        what = "Omega" if spec.defines_precision else "Sigma"
        raise NotPositiveDefinite(min_eigenvalue=min_eigenvalue(defining), what=what)
    other = inverse(defining)
    if spec.defines_precision:
        return ModelMatrices(sigma=other, omega=defining)
    return ModelMatrices(sigma=defining, omega=other)
