"""Rate expressions of the polynomial-decay-dominated dependence class.

All functions return the value of the rate *expression*; the unspecified
leading constants of the convergence theory are not modelled.  The
i.i.d. case is the explicit sentinel ``IID_ALPHA`` (``math.inf``).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from pddcov.core.errors import BadInput, BadParam, OutOfRange

logger = logging.getLogger(__name__)

IID_ALPHA: float = math.inf


def parse_alpha(value: float | str) -> float:
    """Accept a positive number, or ``"iid"``/``"inf"`` for the i.i.d. sentinel."""
    if isinstance(value, str):
        text = value.strip().lower()
        if text in {"iid", "inf", "infinity"}:
            return IID_ALPHA
        try:
            value = float(text)
        except ValueError:
            raise BadParam("alpha", value, "expected a positive number, 'iid' or 'inf'") from None
    if not value > 0.0:
        raise BadParam("alpha", value, "must be > 0")
    return float(value)


def is_iid(alpha: float) -> bool:
    return math.isinf(alpha)


@dataclass(frozen=True)
class PddSpec:
    """Decay exponent ``α`` and constant ``C₀`` of ``|R^{ij}|_∞ <= C₀|i−j|^{−α}``."""

    alpha: float
    c0: float = 1.0

    def __post_init__(self) -> None:
        if not self.alpha > 0.0:
            raise BadParam("alpha", self.alpha, "must be > 0")
        if not (self.c0 > 0.0 and math.isfinite(self.c0)):
            raise BadParam("c0", self.c0, "must be a positive finite number")


@dataclass(frozen=True)
class RateInput:
    """Sample size, dimension, decay exponent and ℓ1 bound ``M_p`` of ``Ω``."""

    n: int
    p: int
    alpha: float
    m_p: float = 1.0

    def __post_init__(self) -> None:
        if self.n < 2:
            raise BadInput(f"rates need n >= 2, got {self.n}")
        if self.p < 2:
            raise BadInput(f"rates need p >= 2, got {self.p}")
        if not self.alpha > 0.0:
            raise BadInput(f"rates need alpha > 0, got {self.alpha}")
        if not self.m_p >= 1.0:
            raise BadInput(f"rates need m_p >= 1, got {self.m_p}")


def _rate(n: int, p: int, alpha: float, m_p: float) -> float:
    log_p = math.log(p)
    log_n = math.log(n)
    log_m = math.log(m_p)
    if is_iid(alpha):
        return math.sqrt(log_p / n)
    if alpha < 1.0:
        return (
            m_p ** (2.0 / 3.0)
            * n ** (-alpha / 3.0)
            * log_p ** (-1.0 / 6.0)
            * math.sqrt(log_p + (1.0 - 2.0 * alpha / 3.0) * log_n + (4.0 / 3.0) * log_m)
        )
    if alpha == 1.0:
        return (
            m_p ** (2.0 / 3.0)
            * n ** (-1.0 / 3.0)
            * log_p ** (-1.0 / 6.0)
            * math.sqrt(log_p + log_n / 3.0 + (4.0 / 3.0) * log_m)
            * log_n ** (1.0 / 3.0)
        )
    k = 1.0 + 2.0 * alpha
    return (
        m_p ** (2.0 / k)
        * n ** (-alpha / k)
        * log_p ** (-1.0 / (2.0 * k))
        * math.sqrt(log_p + log_n / k + (4.0 / k) * log_m)
    )


def tau_prime(inp: RateInput) -> float:
    """Thresholding rate ``τ′``; ``√(log p / n)`` in the i.i.d. case.

    Example
    -------
    ::

        >>> round(tau_prime(RateInput(n=100, p=100, alpha=IID_ALPHA)), 4)
        0.2146
    """
    return _rate(inp.n, inp.p, inp.alpha, 1.0)


def lambda_prime(inp: RateInput) -> float:
    """CLIME rate ``λ′``, the ``M_p``-weighted analogue of ``τ′``.

    Coincides with ``tau_prime`` exactly when ``m_p == 1``; the i.i.d. case
    is ``√(log p / n)`` regardless of ``m_p``.
    """
    return _rate(inp.n, inp.p, inp.alpha, inp.m_p)


def tau_zero(n: int, p: int, f: int) -> float:
    """General-class rate ``τ₀ = √(f log(p f) / n)``."""
    if not 1 <= f <= n:
        raise BadInput(f"block size f={f} must lie in [1, {n}]")
    return math.sqrt(f * math.log(p * f) / n)


def block_size_f(inp: RateInput, for_clime: bool = False) -> int:
    """Explicit block size ``f`` rounded to an integer in ``[1, n]``.

    Raises
    ------
    OutOfRange
        If the unrounded expression exceeds ``n``.
    """
    n, alpha = inp.n, inp.alpha
    log_p = math.log(inp.p)
    if is_iid(alpha):
        return 1
    if alpha < 1.0:
        f0 = n ** (1.0 - 2.0 * alpha / 3.0) * log_p ** (-1.0 / 3.0)
    elif alpha == 1.0:
        f0 = (n * math.log(n) ** 2) ** (1.0 / 3.0) * log_p ** (-1.0 / 3.0)
    else:
        f0 = (n / log_p) ** (1.0 / (1.0 + 2.0 * alpha))
    if for_clime:
        exponent = 4.0 / 3.0 if alpha <= 1.0 else 4.0 / (1.0 + 2.0 * alpha)
        f0 *= inp.m_p**exponent
    if f0 > n:
        raise OutOfRange(name="f", value=f0, upper=float(n))
    return max(1, round(f0))


def g_bound(n: int, f: int, spec: PddSpec) -> float:
    """Dependence budget ``g`` of the general class implied by ``B(C₀, α)``.

    ``2C₀ f^{−α}[(n/f)^{1−α} − α]/(1−α)`` for ``α != 1`` and
    ``2C₀ f^{−1}[1 + log(n/f)]`` for ``α = 1``; zero in the i.i.d. case.
    """
    if not 1 <= f <= n:
        raise BadInput(f"block size f={f} must lie in [1, {n}]")
    alpha = spec.alpha
    if is_iid(alpha):
        return 0.0
    if alpha == 1.0:
        return 2.0 * spec.c0 / f * (1.0 + math.log(n / f))
    return 2.0 * spec.c0 * f ** (-alpha) * ((n / f) ** (1.0 - alpha) - alpha) / (1.0 - alpha)
