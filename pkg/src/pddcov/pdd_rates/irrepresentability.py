"""Irrepresentability diagnostics for support recovery.

With ``Γ = R ⊗ R`` and ``S`` the support of ``Ω`` (diagonal included),
the condition reads ``max_{e∈Sᶜ} |Γ_eS Γ_SS⁻¹|₁ <= 1 − β``.  Pairs
``(i, j)`` are indexed as ``i + j·p``.
"""
from __future__ import annotations

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from pddcov.core.errors import SingularGammaSS, SingularMatrix, TooLarge
from pddcov.linalg.matrix import SymmetricMatrix
from pddcov.linalg.norms import NormKind, inverse, kron, matrix_norm

logger = logging.getLogger(__name__)

MAX_DIM: int = 50


@dataclass(frozen=True)
class IrrepresentabilityReport:
    """``β``, ``κ_R = ‖R‖₁``, ``κ_Γ = ‖Γ_SS⁻¹‖₁`` and the row degree ``d``.

    ``beta <= 0`` means the condition fails.
    """

    beta: float
    kappa_r: float
    kappa_gamma: float
    d: int

    def lambda_scale(self, tau_prime: float) -> float:
        """Penalty scale ``8τ′/β`` for exact support recovery (``inf`` if ``β <= 0``)."""
        if self.beta <= 0.0:
            return math.inf
        return 8.0 * tau_prime / self.beta

    @property
    def lambda_ceiling(self) -> float:
        """Largest admissible penalty ``1/[6(1+β/8) d max(κ_R κ_Γ, κ_R³ κ_Γ²)]``."""
        worst = max(self.kappa_r * self.kappa_gamma, self.kappa_r**3 * self.kappa_gamma**2)
        return 1.0 / (6.0 * (1.0 + self.beta / 8.0) * self.d * worst)

    def to_dict(self) -> dict[str, float | int]:
        return {
            "beta": self.beta,
            "kappa_R": self.kappa_r,
            "kappa_Gamma": self.kappa_gamma,
            "d": self.d,
            "lambda_ceiling": self.lambda_ceiling,
        }


def support_of(omega: SymmetricMatrix, atol: float = 0.0) -> set[tuple[int, int]]:
    """Index pairs with ``|ω_ij| > atol``."""
    rows, cols = np.nonzero(np.abs(omega.values) > atol)
    return {(int(i), int(j)) for i, j in zip(rows, cols)}


def irrepresentability(
    corr: SymmetricMatrix,
    omega_support: Iterable[tuple[int, int]],
) -> IrrepresentabilityReport:
    """Irrepresentability constants of ``R`` for a given support.

    The support is closed under transposition and always contains the
    diagonal.

    Raises
    ------
    TooLarge
        If ``p > 50`` (``Γ`` has ``p⁴`` entries).
    SingularGammaSS
        If ``Γ_SS`` is singular.
    """
    p = corr.dim
    if p > MAX_DIM:
        raise TooLarge(p=p, limit=MAX_DIM)
    pairs = {(i, i) for i in range(p)}
    for i, j in omega_support:
        pairs.add((i, j))
        pairs.add((j, i))

    mask = np.zeros(p * p, dtype=bool)
    for i, j in pairs:
        mask[i + j * p] = True
    support = np.flatnonzero(mask)
    complement = np.flatnonzero(~mask)

    gamma = kron(corr, corr).values
    gamma_ss = SymmetricMatrix.from_upper(gamma[np.ix_(support, support)])
    try:
        gamma_ss_inv = inverse(gamma_ss)
    except SingularMatrix as exc:
        raise SingularGammaSS(support_size=int(support.size)) from exc

    if complement.size == 0:
        beta = 1.0
    else:
        gamma_cs = gamma[np.ix_(complement, support)]
        beta = 1.0 - float(np.max(np.sum(np.abs(gamma_cs @ gamma_ss_inv.values), axis=1)))

    degree = np.zeros(p, dtype=np.int64)
    for i, _ in pairs:
        degree[i] += 1
    report = IrrepresentabilityReport(
        beta=beta,
        kappa_r=matrix_norm(corr, NormKind.L1),
        kappa_gamma=matrix_norm(gamma_ss_inv, NormKind.L1),
        d=int(degree.max()),
    )
    logger.debug("irrepresentability p=%d |S|=%d beta=%.4f", p, support.size, beta)
    return report
