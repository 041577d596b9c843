"""Unit tests for pddcov.moments — panels, sample moments, autocorrelation."""
from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest
import scipy.signal
from numpy.testing import assert_allclose, assert_array_equal

from pddcov.core.errors import BadInput, BadLag, DegenerateInput, ZeroVariance
from pddcov.linalg import SymmetricMatrix
from pddcov.moments import (
    TimeSeriesPanel,
    covariance_to_correlation,
    sample_autocorrelation,
    sample_correlation,
    sample_covariance,
)


class TestTimeSeriesPanel:
    def test_one_dimensional_input_is_single_series(self) -> None:
        panel = TimeSeriesPanel([1.0, 2.0, 3.0])
        assert (panel.p, panel.n) == (1, 3)

    def test_single_time_point_is_degenerate(self) -> None:
        with pytest.raises(DegenerateInput):
            TimeSeriesPanel([[1.0], [2.0]])

    def test_nan_rejected(self) -> None:
        with pytest.raises(BadInput):
            TimeSeriesPanel([[1.0, np.nan]])

    def test_columns_selects_time_points(self) -> None:
        panel = TimeSeriesPanel(np.arange(10.0).reshape(2, 5))
        sub = panel.columns([0, 4])
        assert_array_equal(sub.data, [[0.0, 4.0], [5.0, 9.0]])

    def test_constant_series_flagged(self) -> None:
        panel = TimeSeriesPanel([[1.0, 2.0, 3.0], [4.0, 4.0, 4.0]])
        with pytest.raises(ZeroVariance) as info:
            panel.require_positive_variance()
        assert info.value.index == 1

    def test_csv_transpose(self, tmp_path: Path) -> None:
        path = tmp_path / "panel.csv"
        np.savetxt(path, np.arange(6.0).reshape(3, 2), delimiter=",")
        panel = TimeSeriesPanel.from_csv(path, transpose=True)
        assert (panel.p, panel.n) == (2, 3)

    def test_csv_round_trip(self, tmp_path: Path, gaussian_panel: TimeSeriesPanel) -> None:
        path = tmp_path / "panel.csv"
        gaussian_panel.to_csv(path)
        assert_array_equal(TimeSeriesPanel.from_csv(path).data, gaussian_panel.data)


class TestSampleMoments:
    def test_two_point_covariance(self) -> None:
        assert_allclose(sample_covariance(TimeSeriesPanel([[1.0, 3.0]])).values, [[1.0]])

    def test_matches_numpy_with_divisor_n(self, gaussian_panel: TimeSeriesPanel) -> None:
        expected = np.cov(gaussian_panel.data, bias=True)
        assert_allclose(sample_covariance(gaussian_panel).values, expected, atol=1e-14)

    def test_shift_invariance(self, gaussian_panel: TimeSeriesPanel) -> None:
        shifted = TimeSeriesPanel(gaussian_panel.data + 100.0)
        assert_allclose(
            sample_covariance(shifted).values, sample_covariance(gaussian_panel).values, atol=1e-10
        )

    def test_correlation_has_unit_diagonal(self, gaussian_panel: TimeSeriesPanel) -> None:
        corr = sample_correlation(gaussian_panel)
        assert_array_equal(corr.diag(), np.ones(gaussian_panel.p))
        assert np.all(np.abs(corr.values) <= 1.0 + 1e-12)

    def test_correlation_rescaling_invariance(self, gaussian_panel: TimeSeriesPanel) -> None:
        scales = np.linspace(0.01, 50.0, gaussian_panel.p)
        rescaled = TimeSeriesPanel(scales[:, np.newaxis] * gaussian_panel.data)
        assert_allclose(
            sample_correlation(rescaled).values,
            sample_correlation(gaussian_panel).values,
            atol=1e-12,
        )

    def test_covariance_is_positive_semidefinite(self) -> None:
        rng = np.random.default_rng(31)
        for _ in range(1000):
            p = int(rng.integers(2, 11))
            n = int(rng.integers(2, 31))
            sigma = sample_covariance(TimeSeriesPanel(rng.standard_normal((p, n)))).values
            assert np.linalg.eigvalsh(sigma)[0] >= -1e-10 * np.trace(sigma)

    def test_zero_variance_reported_with_index(self) -> None:
        sigma = SymmetricMatrix.diagonal([1.0, 0.0, 2.0])
        with pytest.raises(ZeroVariance) as info:
            covariance_to_correlation(sigma)
        assert info.value.index == 1


class TestAutocorrelation:
    def test_lag_zero_is_one(self, rng: np.random.Generator) -> None:
        acf = sample_autocorrelation(rng.standard_normal(50), 5)
        assert acf.shape == (6,)
        assert acf[0] == 1.0

    def test_biased_estimator_by_hand(self) -> None:
        x = np.array([1.0, 2.0, 3.0, 4.0])
        centred = x - 2.5
        gamma0 = centred @ centred / 4
        expected = (centred[:-1] @ centred[1:]) / 4 / gamma0
        assert sample_autocorrelation(x, 1)[1] == pytest.approx(expected)

    def test_alternating_series(self) -> None:
        n = 100
        x = np.tile([1.0, -1.0], n // 2)
        assert sample_autocorrelation(x, 1)[1] == pytest.approx(-(n - 1) / n, abs=1e-14)

    def test_ar1_lag_one(self) -> None:
        shocks = np.random.default_rng(12).standard_normal(10_000)
        series = scipy.signal.lfilter([1.0], [1.0, -0.5], shocks)
        assert sample_autocorrelation(series, 1)[1] == pytest.approx(0.5, abs=0.03)

    def test_lag_bounds(self) -> None:
        with pytest.raises(BadLag):
            sample_autocorrelation([1.0, 2.0, 3.0], 3)
        with pytest.raises(BadLag):
            sample_autocorrelation([1.0, 2.0, 3.0], 0)

    def test_constant_series(self) -> None:
        with pytest.raises(ZeroVariance):
            sample_autocorrelation([2.0, 2.0, 2.0], 1)
