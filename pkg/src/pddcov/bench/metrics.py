"""Estimation losses and support-recovery rates."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from pddcov.core.errors import DimMismatch
from pddcov.linalg.matrix import SymmetricMatrix
from pddcov.linalg.norms import NormKind, matrix_norm

METRICS: tuple[str, ...] = ("spectral", "frobenius", "max", "tpr", "fpr", "sign")

# Reported only when the truth has a known support.
SUPPORT_METRICS: frozenset[str] = frozenset({"tpr", "fpr", "sign"})


@dataclass(frozen=True)
class EvalReport:
    """Losses of one estimate against the truth.

    ``tpr``, ``fpr`` and ``sign_consistent`` are ``None`` unless the truth
    has a known off-diagonal support.  ``sign_consistent`` holds when every
    true non-zero is estimated with its own sign; averaged over replications
    it becomes the ``sign`` rate.
    """

    spectral_loss: float
    frobenius_loss: float
    max_loss: float
    tpr: float | None = None
    fpr: float | None = None
    sign_consistent: bool | None = None

    def metric(self, name: str) -> float | None:
        """Look a value up by its column name in :data:`METRICS`."""
        return {
            "spectral": self.spectral_loss,
            "frobenius": self.frobenius_loss,
            "max": self.max_loss,
            "tpr": self.tpr,
            "fpr": self.fpr,
            "sign": None if self.sign_consistent is None else float(self.sign_consistent),
        }[name]


def evaluate(
    estimate: SymmetricMatrix,
    truth: SymmetricMatrix,
    off_diagonal_support_known: bool,
) -> EvalReport:
    """Compare ``estimate`` with ``truth``.

    Rates are counted over unordered off-diagonal pairs ``i < j``:
    ``TPR = #{ω̂_ij ≠ 0 and ω_ij ≠ 0} / #{ω_ij ≠ 0}`` and
    ``FPR = #{ω̂_ij ≠ 0 and ω_ij = 0} / #{ω_ij = 0}``.  An empty
    denominator gives ``TPR = 1`` and ``FPR = 0``.

    Raises
    ------
    DimMismatch
        When the two matrices differ in dimension.
    """
    if estimate.dim != truth.dim:
        raise DimMismatch(left=estimate.dim, right=truth.dim)
    diff = estimate - truth
    report = EvalReport(
        spectral_loss=matrix_norm(diff, NormKind.SPECTRAL),
        frobenius_loss=matrix_norm(diff, NormKind.FROBENIUS),
        max_loss=matrix_norm(diff, NormKind.ELEM_INF),
    )
    if not off_diagonal_support_known:
        return report
    upper = np.triu_indices(truth.dim, k=1)
    true_values = truth.values[upper]
    est_values = estimate.values[upper]
    true_nonzero = true_values != 0.0
    est_nonzero = est_values != 0.0
    positives = int(np.count_nonzero(true_nonzero))
    negatives = true_values.size - positives
    tpr = np.count_nonzero(est_nonzero & true_nonzero) / positives if positives else 1.0
    fpr = np.count_nonzero(est_nonzero & ~true_nonzero) / negatives if negatives else 0.0
    same_sign = np.sign(est_values[true_nonzero]) == np.sign(true_values[true_nonzero])
    return EvalReport(
        spectral_loss=report.spectral_loss,
        frobenius_loss=report.frobenius_loss,
        max_loss=report.max_loss,
        tpr=float(tpr),
        fpr=float(fpr),
        sign_consistent=bool(np.all(same_sign)),
    )


@dataclass(frozen=True)
class MetricSummary:
    """Mean and sample standard deviation over replications."""

    mean: float
    sd: float
    count: int

    def cell(self) -> str:
        """``mean(SD)`` at two decimals, ``N/A`` when nothing was measured."""
        if self.count == 0:
            return "N/A"
        if math.isnan(self.sd):
            return f"{self.mean:.2f}"
        return f"{self.mean:.2f}({self.sd:.2f})"


def aggregate(values: ArrayLike) -> MetricSummary:
    """Mean and SD (divisor ``k − 1``) with NumPy's pairwise summation.

    ``NaN`` entries are treated as missing.  With one value the SD is
    ``NaN``; with none both are.
    """
    data = np.asarray(values, dtype=np.float64).ravel()
    data = data[~np.isnan(data)]
    count = int(data.size)
    if count == 0:
        return MetricSummary(math.nan, math.nan, 0)
    mean = float(np.sum(data) / count)
    if count == 1:
        return MetricSummary(mean, math.nan, 1)
    sd = math.sqrt(float(np.sum((data - mean) ** 2)) / (count - 1))
    return MetricSummary(mean, sd, count)
