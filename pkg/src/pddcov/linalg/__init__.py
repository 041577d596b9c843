"""Dense symmetric matrices, norms, Kronecker products and inversion."""
from __future__ import annotations

from pddcov.linalg.csvio import (
    read_array_csv,
    read_matrix_csv,
    write_array_csv,
    write_matrix_csv,
)
from pddcov.linalg.matrix import DenseMatrix, SymmetricMatrix
from pddcov.linalg.norms import (
    NormKind,
    inverse,
    is_positive_definite,
    kron,
    matrix_norm,
    min_eigenvalue,
)

__all__ = [
    "DenseMatrix",
    "NormKind",
    "SymmetricMatrix",
    "inverse",
    "is_positive_definite",
    "kron",
    "matrix_norm",
    "min_eigenvalue",
    "read_array_csv",
    "read_matrix_csv",
    "write_array_csv",
    "write_matrix_csv",
]
