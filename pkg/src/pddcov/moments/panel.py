"""Time-series panel container.

A panel stores ``p`` series over ``n`` time points as a ``p × n`` array;
column ``t`` is the observation vector ``X_t``.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numpy.typing import ArrayLike, NDArray

from pddcov.core.errors import BadInput, DegenerateInput, ZeroVariance
from pddcov.linalg.csvio import read_array_csv, write_array_csv


@dataclass(frozen=True, eq=False)
class TimeSeriesPanel:
    """A finite ``p × n`` matrix of observations with ``n >= 2``.

    Parameters
    ----------
    data:
        Array-like of shape ``(p, n)``.  A 1-D input is read as a single
        series (``p = 1``).

    Raises
    ------
    BadInput
        If the data are not 1-D/2-D or contain NaN/Inf.
    DegenerateInput
        If fewer than two time points are given.
    """

    data: NDArray[np.float64]

    def __init__(self, data: ArrayLike) -> None:
        array = np.array(data, dtype=np.float64, copy=True)
        if array.ndim == 1:
            array = array[np.newaxis, :]
        if array.ndim != 2 or array.shape[0] < 1:
            raise BadInput(f"panel must be a p x n array, got shape {array.shape}")
        if array.shape[1] < 2:
            raise DegenerateInput(n=int(array.shape[1]), minimum=2)
        if not np.all(np.isfinite(array)):
            raise BadInput("panel contains NaN or infinite entries")
        array.setflags(write=False)
        object.__setattr__(self, "data", array)

    @property
    def p(self) -> int:
        return int(self.data.shape[0])

    @property
    def n(self) -> int:
        return int(self.data.shape[1])

    def columns(self, indices: Sequence[int] | NDArray[np.intp]) -> TimeSeriesPanel:
        """Sub-panel made of the given time points, in the given order."""
        return TimeSeriesPanel(self.data[:, np.asarray(indices, dtype=np.intp)])

    def series(self, index: int) -> NDArray[np.float64]:
        """Return series ``index`` as a read-only 1-D view."""
        return self.data[index]

    def require_positive_variance(self) -> None:
        """Raise ``ZeroVariance`` for the first series with no variation."""
        variances = np.var(self.data, axis=1)
        for index, variance in enumerate(variances):
            if not variance > 0.0:
                raise ZeroVariance(index=index, variance=float(variance))

    @classmethod
    def from_csv(cls, path: str | Path, transpose: bool = False) -> TimeSeriesPanel:
        """Read a headerless CSV panel (``p`` rows × ``n`` columns).

        ``transpose=True`` reads an ``n × p`` file instead.
        """
        array = read_array_csv(path)
        return cls(array.T if transpose else array)

    def to_csv(self, path: str | Path) -> None:
        write_array_csv(self.data, path)

    def __repr__(self) -> str:
        return f"TimeSeriesPanel(p={self.p}, n={self.n})"
