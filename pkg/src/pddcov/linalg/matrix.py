"""Immutable dense matrix containers.

``SymmetricMatrix`` houses every square symmetric object in the package
(Σ, R, Ω, K, Γ and their estimates); ``DenseMatrix`` carries rectangular or
non-symmetric intermediates such as the raw CLIME column matrix and lagged
cross-correlation matrices.

Both containers copy their input, reject non-finite entries eagerly and
mark the stored array read-only, so downstream code never re-checks
finiteness and values can be shared freely between worker threads.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from pddcov.core.errors import BadInput

# Relative asymmetry tolerated when building a SymmetricMatrix from a full array.
SYMMETRY_RTOL: float = 1e-10


def _as_finite_2d(values: ArrayLike, what: str) -> NDArray[np.float64]:
    array = np.array(values, dtype=np.float64, copy=True)
    if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
        raise BadInput(f"{what} must be a non-empty 2-D array, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise BadInput(f"{what} contains NaN or infinite entries")
    return array


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """A finite real ``rows × cols`` matrix.

    Parameters
    ----------
    values:
        Anything convertible to a 2-D float array.
    """

    values: NDArray[np.float64]

    def __init__(self, values: ArrayLike) -> None:
        array = _as_finite_2d(values, "DenseMatrix")
        array.setflags(write=False)
        object.__setattr__(self, "values", array)

    @property
    def rows(self) -> int:
        return int(self.values.shape[0])

    @property
    def cols(self) -> int:
        return int(self.values.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def to_array(self) -> NDArray[np.float64]:
        """Return a writable copy of the entries."""
        return np.array(self.values, copy=True)

    def __repr__(self) -> str:
        return f"DenseMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True, eq=False)
class SymmetricMatrix:
    """A finite real symmetric ``dim × dim`` matrix.

    Symmetry holds by construction: the stored array is rebuilt from the
    upper triangle and diagonal of the input, after checking that the input
    was symmetric to within ``SYMMETRY_RTOL`` of its largest entry.

    Parameters
    ----------
    values:
        A square array-like.  Use ``from_upper`` to build from the upper
        triangle alone.
    """

    values: NDArray[np.float64] = field(repr=False)

    def __init__(self, values: ArrayLike) -> None:
        array = _as_finite_2d(values, "SymmetricMatrix")
        rows, cols = array.shape
        if rows != cols:
            raise BadInput(f"SymmetricMatrix must be square, got {rows}x{cols}")
        scale = max(1.0, float(np.max(np.abs(array))))
        asymmetry = float(np.max(np.abs(array - array.T)))
        if asymmetry > SYMMETRY_RTOL * scale:
            raise BadInput(f"matrix is not symmetric (max |M - M^T| = {asymmetry:.3e})")
        object.__setattr__(self, "values", _mirror_upper(array))
        self.values.setflags(write=False)

    @classmethod
    def from_upper(cls, values: ArrayLike) -> SymmetricMatrix:
        """Build from the upper triangle and diagonal of ``values``; the rest is ignored."""
        array = _as_finite_2d(values, "SymmetricMatrix")
        if array.shape[0] != array.shape[1]:
            raise BadInput(f"SymmetricMatrix must be square, got {array.shape}")
        return cls(_mirror_upper(array))

    @classmethod
    def identity(cls, dim: int) -> SymmetricMatrix:
        return cls(np.eye(dim))

    @classmethod
    def diagonal(cls, entries: ArrayLike) -> SymmetricMatrix:
        return cls(np.diag(np.asarray(entries, dtype=np.float64)))

    @property
    def dim(self) -> int:
        return int(self.values.shape[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.dim, self.dim)

    def diag(self) -> NDArray[np.float64]:
        """Return a copy of the diagonal."""
        return np.array(np.diag(self.values), copy=True)

    def to_array(self) -> NDArray[np.float64]:
        """Return a writable copy of the entries."""
        return np.array(self.values, copy=True)

    def eigenvalues(self) -> NDArray[np.float64]:
        """Eigenvalues in ascending order (symmetric eigensolver)."""
        return np.linalg.eigvalsh(self.values)

    def __add__(self, other: SymmetricMatrix) -> SymmetricMatrix:
        return SymmetricMatrix(self.values + other.values)

    def __sub__(self, other: SymmetricMatrix) -> SymmetricMatrix:
        return SymmetricMatrix(self.values - other.values)

    def __repr__(self) -> str:
        return f"SymmetricMatrix(dim={self.dim})"


def _mirror_upper(array: NDArray[np.float64]) -> NDArray[np.float64]:
    upper = np.triu(array)
    return upper + np.triu(array, 1).T
