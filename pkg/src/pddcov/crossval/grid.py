"""Candidate grids for tuning parameters."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from pddcov.core.errors import BadParam

DEFAULT_GRID_SIZE: int = 20
DEFAULT_LOW: float = 0.01
DEFAULT_HIGH: float = 1.0


@dataclass(frozen=True)
class TuningGrid:
    """Strictly increasing, nonnegative candidate values."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.values)
        if not values:
            raise BadParam("grid", "", "must not be empty")
        if any(not np.isfinite(v) or v < 0.0 for v in values):
            raise BadParam("grid", str(values), "values must be finite and >= 0")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise BadParam("grid", str(values), "values must be strictly increasing")
        object.__setattr__(self, "values", values)

    @classmethod
    def log_spaced(
        cls,
        low: float = DEFAULT_LOW,
        high: float = DEFAULT_HIGH,
        num: int = DEFAULT_GRID_SIZE,
    ) -> TuningGrid:
        if not 0.0 < low < high:
            raise BadParam("grid", f"{low}..{high}", "needs 0 < low < high")
        if num < 1:
            raise BadParam("grid_size", num, "must be >= 1")
        if num == 1:
            return cls((low,))
        return cls(tuple(np.geomspace(low, high, num)))

    @classmethod
    def parse(cls, text: str) -> TuningGrid:
        """Parse ``"auto"`` (default log grid) or comma-separated values."""
        if text.strip().lower() == "auto":
            return cls.log_spaced()
        try:
            values = sorted(float(item) for item in text.split(",") if item.strip())
        except ValueError:
            raise BadParam("grid", text, "expected 'auto' or comma-separated numbers") from None
        return cls(tuple(values))

    def require_positive(self) -> TuningGrid:
        if self.values[0] <= 0.0:
            raise BadParam("grid", str(self.values), "penalty grids must be strictly positive")
        return self

    def __len__(self) -> int:
        return len(self.values)
