"""Matrix norms, Kronecker products and inversion.

Norm vocabulary
---------------
``spectral``     ‖M‖₂, the largest singular value
``frobenius``    ‖M‖_F
``l1``           matrix ℓ1 norm, the maximum absolute column sum
``elem_l1``      |M|₁, the sum of all absolute entries
``elem_l1_off``  |M|₁,off, the same sum over off-diagonal entries
``elem_inf``     |M|_∞, the largest absolute entry
"""
from __future__ import annotations

import logging
from enum import Enum

import numpy as np
import scipy.linalg

from pddcov.core.errors import DimensionOverflow, SingularMatrix
from pddcov.linalg.matrix import DenseMatrix, SymmetricMatrix

logger = logging.getLogger(__name__)

# Largest number of entries ``kron`` may allocate (2**26 doubles = 512 MiB).
KRON_ENTRY_BUDGET: int = 2**26

# Relative eigenvalue floor below which a matrix counts as singular.
SINGULAR_RTOL: float = 1e-12


class NormKind(str, Enum):
    """Supported matrix norms."""

    SPECTRAL = "spectral"
    FROBENIUS = "frobenius"
    L1 = "l1"
    ELEM_L1 = "elem_l1"
    ELEM_L1_OFF = "elem_l1_off"
    ELEM_INF = "elem_inf"


def matrix_norm(matrix: SymmetricMatrix | DenseMatrix, kind: NormKind | str) -> float:
    """Return the requested norm of ``matrix``.

    The spectral norm of a ``SymmetricMatrix`` is its largest absolute
    eigenvalue from the full symmetric eigendecomposition; for a
    ``DenseMatrix`` it is the largest singular value.

    Parameters
    ----------
    matrix:
        The matrix to measure.
    kind:
        A ``NormKind`` or its string value.

    Returns
    -------
    float
        A non-negative real.
    """
    kind = NormKind(kind)
    values = matrix.values
    if kind is NormKind.SPECTRAL:
        if isinstance(matrix, SymmetricMatrix):
            return float(np.max(np.abs(np.linalg.eigvalsh(values))))
        return float(np.linalg.norm(values, ord=2))
    if kind is NormKind.FROBENIUS:
        return float(np.linalg.norm(values, ord="fro"))
    if kind is NormKind.L1:
        return float(np.max(np.sum(np.abs(values), axis=0)))
    if kind is NormKind.ELEM_L1:
        return float(np.sum(np.abs(values)))
    if kind is NormKind.ELEM_L1_OFF:
        off = np.abs(values)
        diag_len = min(off.shape)
        return float(np.sum(off) - np.sum(np.abs(np.diag(values)[:diag_len])))
    return float(np.max(np.abs(values)))


def kron(
    a: SymmetricMatrix,
    b: SymmetricMatrix,
    entry_budget: int = KRON_ENTRY_BUDGET,
) -> SymmetricMatrix:
    """Kronecker product ``A ⊗ B`` of two symmetric matrices.

    Rows and columns are indexed by pairs: with ``p = b.dim``, the pair
    ``(i, j)`` (0-based) sits at position ``i + j·p``, so the entry at
    ``((i, j), (k, l))`` equals ``A[j, l] · B[i, k]``.  This is the layout
    under which ``R ⊗ R`` acts on column-stacked ``vec`` of a p×p matrix.

    Raises
    ------
    DimensionOverflow
        If the result would exceed ``entry_budget`` entries.
    """
    size = a.dim * b.dim
    if size * size > entry_budget:
        raise DimensionOverflow(entries=size * size, limit=entry_budget)
    return SymmetricMatrix(np.kron(a.values, b.values))


def min_eigenvalue(matrix: SymmetricMatrix) -> float:
    """Smallest eigenvalue of ``matrix``."""
    return float(np.linalg.eigvalsh(matrix.values)[0])


def is_positive_definite(matrix: SymmetricMatrix) -> bool:
    """True when a Cholesky factorisation of ``matrix`` succeeds."""
    try:
        np.linalg.cholesky(matrix.values)
    except np.linalg.LinAlgError:
        return False
    return True


def inverse(matrix: SymmetricMatrix) -> SymmetricMatrix:
    """Inverse of a numerically nonsingular symmetric matrix.

    Raises
    ------
    SingularMatrix
        When ``min |eigenvalue| <= 1e-12 · max |eigenvalue|``; this is how a
        sample covariance with ``p >= n`` is reported.
    """
    magnitudes = np.abs(np.linalg.eigvalsh(matrix.values))
    smallest, largest = float(np.min(magnitudes)), float(np.max(magnitudes))
    if largest == 0.0 or smallest <= SINGULAR_RTOL * largest:
        raise SingularMatrix(min_abs_eigenvalue=smallest, max_abs_eigenvalue=largest)
    identity = np.eye(matrix.dim)
    try:
        solved = scipy.linalg.solve(matrix.values, identity, assume_a="sym")
    except (scipy.linalg.LinAlgError, ValueError) as exc:  # pragma: no cover - guarded above
        raise SingularMatrix(min_abs_eigenvalue=smallest, max_abs_eigenvalue=largest) from exc
    return SymmetricMatrix((solved + solved.T) / 2.0)
