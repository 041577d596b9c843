"""Unit tests for pddcov.linalg — containers, norms, kron, inversion, CSV I/O."""
from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from pddcov.core.errors import BadInput, DimensionOverflow, SingularMatrix
from pddcov.linalg import (
    DenseMatrix,
    NormKind,
    SymmetricMatrix,
    inverse,
    is_positive_definite,
    kron,
    matrix_norm,
    min_eigenvalue,
    read_matrix_csv,
    write_matrix_csv,
)
from tests.oracles import kron_loops, power_iteration_norm


def _random_symmetric(rng: np.random.Generator, p: int) -> SymmetricMatrix:
    a = rng.standard_normal((p, p))
    return SymmetricMatrix((a + a.T) / 2.0)


def _random_spd(seed: int, p: int) -> SymmetricMatrix:
    a = np.random.default_rng(seed).standard_normal((p, p))
    return SymmetricMatrix(a @ a.T / p + 0.1 * np.eye(p))


# ---------------------------------------------------------------------------
# SymmetricMatrix / DenseMatrix
# ---------------------------------------------------------------------------


class TestSymmetricMatrix:
    def test_values_are_read_only(self) -> None:
        m = SymmetricMatrix.identity(3)
        with pytest.raises(ValueError):
            m.values[0, 0] = 2.0

    def test_input_is_copied(self) -> None:
        source = np.eye(2)
        m = SymmetricMatrix(source)
        source[0, 0] = 5.0
        assert m.values[0, 0] == 1.0

    def test_rejects_asymmetric_input(self) -> None:
        with pytest.raises(BadInput):
            SymmetricMatrix([[1.0, 0.5], [0.2, 1.0]])

    def test_rejects_non_square(self) -> None:
        with pytest.raises(BadInput):
            SymmetricMatrix(np.ones((2, 3)))

    def test_rejects_nan(self) -> None:
        with pytest.raises(BadInput):
            SymmetricMatrix([[1.0, np.nan], [np.nan, 1.0]])

    def test_from_upper_ignores_lower_triangle(self) -> None:
        m = SymmetricMatrix.from_upper([[1.0, 2.0], [99.0, 3.0]])
        assert_array_equal(m.values, [[1.0, 2.0], [2.0, 3.0]])

    def test_tiny_asymmetry_is_mirrored_exactly(self) -> None:
        m = SymmetricMatrix([[1.0, 0.5], [0.5 + 1e-13, 1.0]])
        assert m.values[0, 1] == m.values[1, 0]

    def test_diagonal_constructor(self) -> None:
        m = SymmetricMatrix.diagonal([1.0, 2.0, 3.0])
        assert m.dim == 3
        assert_array_equal(m.diag(), [1.0, 2.0, 3.0])

    def test_subtraction(self) -> None:
        diff = SymmetricMatrix.identity(2) - SymmetricMatrix.diagonal([1.0, 0.0])
        assert_array_equal(diff.values, [[0.0, 0.0], [0.0, 1.0]])

    def test_eigenvalues_ascending(self) -> None:
        assert_allclose(SymmetricMatrix.diagonal([3.0, 1.0]).eigenvalues(), [1.0, 3.0])


class TestDenseMatrix:
    def test_shape(self) -> None:
        m = DenseMatrix(np.zeros((2, 5)))
        assert m.shape == (2, 5)
        assert "2x5" in repr(m)

    def test_to_array_is_writable_copy(self) -> None:
        m = DenseMatrix(np.ones((2, 2)))
        copy = m.to_array()
        copy[0, 0] = 7.0
        assert m.values[0, 0] == 1.0


# ---------------------------------------------------------------------------
# Norms
# ---------------------------------------------------------------------------


class TestMatrixNorm:
    def test_known_values(self) -> None:
        m = SymmetricMatrix([[2.0, -1.0], [-1.0, 3.0]])
        assert matrix_norm(m, NormKind.FROBENIUS) == pytest.approx(np.sqrt(15.0))
        assert matrix_norm(m, "l1") == pytest.approx(4.0)
        assert matrix_norm(m, "elem_l1") == pytest.approx(7.0)
        assert matrix_norm(m, "elem_l1_off") == pytest.approx(2.0)
        assert matrix_norm(m, "elem_inf") == pytest.approx(3.0)

    def test_spectral_of_indefinite_uses_absolute_eigenvalue(self) -> None:
        m = SymmetricMatrix.diagonal([-5.0, 2.0])
        assert matrix_norm(m, NormKind.SPECTRAL) == pytest.approx(5.0)

    def test_spectral_matches_power_iteration(self, rng: np.random.Generator) -> None:
        for _ in range(5):
            m = _random_symmetric(rng, 8)
            expected = power_iteration_norm(m.values)
            assert matrix_norm(m, NormKind.SPECTRAL) == pytest.approx(expected, rel=1e-6)

    def test_dense_spectral_is_largest_singular_value(self) -> None:
        m = DenseMatrix([[3.0, 0.0, 0.0], [0.0, 4.0, 0.0]])
        assert matrix_norm(m, NormKind.SPECTRAL) == pytest.approx(4.0)

    def test_unknown_norm_rejected(self) -> None:
        with pytest.raises(ValueError):
            matrix_norm(SymmetricMatrix.identity(2), "nuclear")

    @pytest.mark.parametrize("seed", range(10))
    def test_norm_inequalities(self, seed: int) -> None:
        m = _random_spd(seed, 2 + seed)
        spectral = matrix_norm(m, NormKind.SPECTRAL)
        l1 = matrix_norm(m, NormKind.L1)
        assert spectral <= l1 + 1e-12
        frobenius = matrix_norm(m, NormKind.FROBENIUS)
        elem_inf = matrix_norm(m, NormKind.ELEM_INF)
        assert frobenius**2 <= m.dim * l1 * elem_inf * (1.0 + 1e-12)


# ---------------------------------------------------------------------------
# kron
# ---------------------------------------------------------------------------


class TestKron:
    def test_matches_nested_loops(self, rng: np.random.Generator) -> None:
        a = _random_symmetric(rng, 3)
        b = _random_symmetric(rng, 3)
        assert_allclose(kron(a, b).values, kron_loops(a.values, b.values), atol=1e-15)

    def test_identity(self) -> None:
        assert_array_equal(kron(SymmetricMatrix.identity(2), SymmetricMatrix.identity(3)).values,
                           np.eye(6))

    def test_budget_exceeded(self) -> None:
        with pytest.raises(DimensionOverflow) as info:
            kron(SymmetricMatrix.identity(4), SymmetricMatrix.identity(4), entry_budget=100)
        assert info.value.entries == 256

    @pytest.mark.parametrize("seed", range(5))
    def test_mixed_product(self, seed: int) -> None:
        a, b, c, d = (_random_spd(4 * seed + k, 3) for k in range(4))
        product = kron(a, b).values @ kron(c, d).values
        expected = np.kron(a.values @ c.values, b.values @ d.values)
        assert_allclose(product, expected, atol=1e-10)


# ---------------------------------------------------------------------------
# Definiteness and inverse
# ---------------------------------------------------------------------------


class TestInverse:
    def test_inverse_of_known_matrix(self) -> None:
        m = SymmetricMatrix([[2.0, 1.0], [1.0, 2.0]])
        assert_allclose(inverse(m).values, np.array([[2.0, -1.0], [-1.0, 2.0]]) / 3.0)

    def test_inverse_times_matrix_is_identity(self, rng: np.random.Generator) -> None:
        a = rng.standard_normal((6, 6))
        m = SymmetricMatrix(a @ a.T + np.eye(6))
        assert_allclose(inverse(m).values @ m.values, np.eye(6), atol=1e-10)

    @pytest.mark.parametrize("seed", range(5))
    def test_double_inverse_is_identity_map(self, seed: int) -> None:
        m = _random_spd(seed, 5)
        assert_allclose(inverse(inverse(m)).values, m.values, atol=1e-8)

    def test_singular_raises(self) -> None:
        with pytest.raises(SingularMatrix):
            inverse(SymmetricMatrix(np.ones((3, 3))))

    def test_zero_matrix_is_singular(self) -> None:
        with pytest.raises(SingularMatrix):
            inverse(SymmetricMatrix(np.zeros((2, 2))))

    def test_positive_definite_checks(self) -> None:
        assert is_positive_definite(SymmetricMatrix.identity(3))
        assert not is_positive_definite(SymmetricMatrix.diagonal([1.0, -1.0]))
        assert min_eigenvalue(SymmetricMatrix.diagonal([4.0, 0.5])) == pytest.approx(0.5)


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------


class TestCsv:
    def test_write_read_preserves_every_double(self, tmp_path: Path,
                                               rng: np.random.Generator) -> None:
        m = _random_symmetric(rng, 4)
        path = tmp_path / "m.csv"
        write_matrix_csv(m, path)
        assert_array_equal(read_matrix_csv(path).values, m.values)

    def test_non_numeric_rejected(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.csv"
        path.write_text("1,2\nx,4\n", encoding="utf-8")
        with pytest.raises(BadInput):
            read_matrix_csv(path)
