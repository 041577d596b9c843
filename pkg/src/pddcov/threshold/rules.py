"""Generalized thresholding functions.

Every rule ``s_τ`` satisfies, for all ``z`` and ``τ >= 0``:

* ``|s_τ(z)| <= |z|``
* ``s_τ(z) = 0`` whenever ``|z| <= τ``
* ``|s_τ(z) − z| <= τ``
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike, NDArray

from pddcov.core.errors import BadParam


class ThresholdKind(str, Enum):
    HARD = "hard"
    SOFT = "soft"
    SCAD = "scad"
    ADAPTIVE_LASSO = "adaptive_lasso"

    @classmethod
    def parse(cls, text: str) -> ThresholdKind:
        """Accept the enum value or the short CLI alias ``alasso``."""
        key = text.strip().lower()
        if key == "alasso":
            return cls.ADAPTIVE_LASSO
        try:
            return cls(key)
        except ValueError:
            raise BadParam("rule", text, "expected hard, soft, scad or alasso") from None


@dataclass(frozen=True)
class ThresholdRule:
    """A thresholding rule and its shape parameters.

    Parameters
    ----------
    kind:
        Which rule to apply.
    scad_a:
        SCAD shape parameter, must exceed 2.
    al_eta:
        Adaptive-lasso exponent, must be at least 1.
    """

    kind: ThresholdKind = ThresholdKind.HARD
    scad_a: float = 3.7
    al_eta: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", ThresholdKind(self.kind))
        if not self.scad_a > 2.0:
            raise BadParam("scad_a", self.scad_a, "must be > 2")
        if not self.al_eta >= 1.0:
            raise BadParam("al_eta", self.al_eta, "must be >= 1")

    def apply(self, z: ArrayLike, tau: float) -> NDArray[np.float64]:
        """Apply ``s_τ`` elementwise to ``z``."""
        if not tau >= 0.0:
            raise BadParam("tau", tau, "must be >= 0")
        values = np.asarray(z, dtype=np.float64)
        magnitude = np.abs(values)
        if self.kind is ThresholdKind.HARD:
            return np.where(magnitude > tau, values, 0.0)
        if self.kind is ThresholdKind.SOFT:
            return _soft(values, tau)
        if self.kind is ThresholdKind.SCAD:
            return self._scad(values, magnitude, tau)
        return self._adaptive_lasso(values, magnitude, tau)

    def _scad(
        self, values: NDArray[np.float64], magnitude: NDArray[np.float64], tau: float
    ) -> NDArray[np.float64]:
        a = self.scad_a
        middle = ((a - 1.0) * values - np.sign(values) * a * tau) / (a - 2.0)
        return np.where(
            magnitude <= 2.0 * tau,
            _soft(values, tau),
            np.where(magnitude <= a * tau, middle, values),
        )

    def _adaptive_lasso(
        self, values: NDArray[np.float64], magnitude: NDArray[np.float64], tau: float
    ) -> NDArray[np.float64]:
        kept = magnitude > tau
        safe = np.where(kept, magnitude, 1.0)
        shrunk = np.maximum(safe - tau ** (self.al_eta + 1.0) * safe ** (-self.al_eta), 0.0)
        return np.where(kept, np.sign(values) * shrunk, 0.0)


def _soft(values: NDArray[np.float64], tau: float) -> NDArray[np.float64]:
    return np.sign(values) * np.maximum(np.abs(values) - tau, 0.0)


def threshold_value(z: float, tau: float, rule: ThresholdRule) -> float:
    """Scalar ``s_τ(z)``.

    Example
    -------
    ::

        >>> threshold_value(0.5, 0.3, ThresholdRule(ThresholdKind.SOFT))
        0.2
    """
    return float(rule.apply(z, tau))
