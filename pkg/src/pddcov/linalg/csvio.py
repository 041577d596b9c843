"""CSV exchange format for matrices.

Plain numeric rows, no header, ``,`` separator, 17 significant digits so a
write followed by a read reproduces every double exactly.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np
from numpy.typing import NDArray

from pddcov.core.errors import BadInput
from pddcov.linalg.matrix import DenseMatrix, SymmetricMatrix

CSV_FORMAT = "%.17g"


def read_array_csv(path: str | Path) -> NDArray[np.float64]:
    """Read a headerless numeric CSV file into a 2-D array."""
    try:
        array = np.loadtxt(path, delimiter=",", dtype=np.float64, ndmin=2)
    except ValueError as exc:
        raise BadInput(f"{path}: not a numeric CSV matrix ({exc})") from exc
    return array


def write_array_csv(array: NDArray[np.float64], path: str | Path) -> None:
    """Write a 2-D array as headerless CSV at 17 significant digits."""
    np.savetxt(path, np.atleast_2d(array), delimiter=",", fmt=CSV_FORMAT)


def read_matrix_csv(path: str | Path) -> SymmetricMatrix:
    """Read a square symmetric matrix from CSV."""
    return SymmetricMatrix(read_array_csv(path))


def write_matrix_csv(matrix: SymmetricMatrix | DenseMatrix, path: str | Path) -> None:
    """Write ``matrix`` to ``path`` in the CSV exchange format."""
    write_array_csv(matrix.values, path)
