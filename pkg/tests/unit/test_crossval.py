"""Unit tests for pddcov.crossval — split plans, grids and tuning selection."""
from __future__ import annotations

import math

import numpy as np
import pytest
from numpy.testing import assert_array_equal

from pddcov.core.errors import BadParam, TooSmall
from pddcov.crossval import (
    CvResult,
    CvTarget,
    PlanScheme,
    TuningGrid,
    make_kfold_plan,
    make_plan,
    plan_for,
    precision_loss,
    select_lambda_precision,
    select_tau,
)
from pddcov.linalg import SymmetricMatrix
from pddcov.moments import TimeSeriesPanel, sample_covariance
from pddcov.simulate import ModelSpec, simulate_iid
from pddcov.spice import SpiceConfig, spice_estimate
from pddcov.threshold import ThresholdKind, ThresholdRule

HARD = ThresholdRule(ThresholdKind.HARD)


# ---------------------------------------------------------------------------
# Gap-block plans
# ---------------------------------------------------------------------------


class TestMakePlan:
    def test_interior_block_drops_both_neighbours(self) -> None:
        plan = make_plan(40, h1=4, h2=0)
        assert_array_equal(plan.splits[1].validation, np.arange(10, 20))
        assert_array_equal(plan.splits[1].training, np.arange(30, 40))

    def test_edge_block_drops_one_neighbour(self) -> None:
        plan = make_plan(40, h1=4, h2=0)
        assert_array_equal(plan.splits[0].validation, np.arange(0, 10))
        assert_array_equal(plan.splits[0].training, np.arange(20, 40))

    def test_step_one_covers_every_column(self) -> None:
        plan = make_plan(103, h1=7, h2=0)
        covered = np.concatenate([split.validation for split in plan.splits])
        assert_array_equal(np.sort(covered), np.arange(103))
        assert len(plan) == 7

    @pytest.mark.parametrize("seed", range(100))
    def test_random_blocks_keep_their_gap(self, seed: int) -> None:
        plan = make_plan(40, h1=4, h2=3, seed=seed)
        assert len(plan) == 7
        for split in plan.splits[4:]:
            validation = split.validation
            assert validation.size == 10
            assert_array_equal(np.diff(validation), np.ones(9))
            distances = np.abs(np.subtract.outer(split.training, validation))
            assert distances.min() > 10

    @pytest.mark.parametrize(("n", "h1", "h2"), [(40, 4, 3), (200, 10, 10), (57, 5, 2)])
    def test_training_and_validation_are_disjoint(self, n: int, h1: int, h2: int) -> None:
        size = math.ceil(n / h1)
        for split in make_plan(n, h1=h1, h2=h2, seed=3).splits:
            assert np.intersect1d(split.training, split.validation).size == 0
            assert split.training.size >= 2
            distances = np.abs(np.subtract.outer(split.training, split.validation))
            assert distances.min() > size - 1

    def test_deterministic(self) -> None:
        first = make_plan(120, h1=6, h2=5, seed=42)
        second = make_plan(120, h1=6, h2=5, seed=42)
        assert first.digest() == second.digest()
        assert first.digest() != make_plan(120, h1=6, h2=5, seed=43).digest()

    def test_split_indices_are_read_only(self) -> None:
        split = make_plan(40, h1=4, h2=0).splits[0]
        with pytest.raises(ValueError):
            split.training[0] = 5

    @pytest.mark.parametrize(("n", "h1"), [(40, 3), (39, 10), (15, 4)])
    def test_too_small(self, n: int, h1: int) -> None:
        with pytest.raises(TooSmall):
            make_plan(n, h1=h1, h2=0)

    def test_negative_h2(self) -> None:
        with pytest.raises(BadParam):
            make_plan(40, h1=4, h2=-1)


class TestKFoldPlan:
    def test_folds_partition_columns(self) -> None:
        plan = make_kfold_plan(50, k=5, seed=1)
        assert plan.scheme is PlanScheme.KFOLD
        covered = np.concatenate([split.validation for split in plan.splits])
        assert_array_equal(np.sort(covered), np.arange(50))
        for split in plan.splits:
            assert split.validation.size + split.training.size == 50

    @pytest.mark.parametrize(("n", "k"), [(50, 1), (9, 5)])
    def test_rejects(self, n: int, k: int) -> None:
        with pytest.raises(BadParam):
            make_kfold_plan(n, k=k)

    def test_plan_for_auto(self) -> None:
        assert plan_for(100, "auto", iid=True, k=5).scheme is PlanScheme.KFOLD
        assert plan_for(100, "auto", iid=False, h1=5, h2=0).scheme is PlanScheme.GAP_BLOCK
        assert plan_for(100, "kfold", k=4).h1 == 4


# ---------------------------------------------------------------------------
# Grids
# ---------------------------------------------------------------------------


class TestTuningGrid:
    def test_auto(self) -> None:
        grid = TuningGrid.parse("auto")
        assert len(grid) == 20
        assert grid.values[0] == pytest.approx(0.01)
        assert grid.values[-1] == pytest.approx(1.0)

    def test_parse_sorts(self) -> None:
        assert TuningGrid.parse("0.5, 0.1,0.2").values == (0.1, 0.2, 0.5)

    @pytest.mark.parametrize("text", ["", "a,b", "0.1,0.1", "-0.1,0.2"])
    def test_parse_rejects(self, text: str) -> None:
        with pytest.raises(BadParam):
            TuningGrid.parse(text)

    def test_single_point(self) -> None:
        assert TuningGrid.log_spaced(0.2, 0.5, 1).values == (0.2,)

    def test_require_positive(self) -> None:
        with pytest.raises(BadParam):
            TuningGrid((0.0, 0.1)).require_positive()


# ---------------------------------------------------------------------------
# Selection
# ---------------------------------------------------------------------------


class TestCvTarget:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("cov", CvTarget.COVARIANCE),
            ("Corr", CvTarget.CORRELATION),
            ("covariance", CvTarget.COVARIANCE),
        ],
    )
    def test_parse(self, text: str, expected: CvTarget) -> None:
        assert CvTarget.parse(text) is expected

    def test_parse_rejects(self) -> None:
        with pytest.raises(BadParam):
            CvTarget.parse("prec")


class TestSelectTau:
    def test_single_zero_candidate(self, gaussian_panel: TimeSeriesPanel) -> None:
        plan = make_plan(gaussian_panel.n, h1=4, h2=2, seed=0)
        result = select_tau(gaussian_panel, plan, TuningGrid((0.0,)), HARD)
        assert result.selected == 0.0
        assert result.plan_digest == plan.digest()

    def test_keeps_strong_correlations(self) -> None:
        panel = simulate_iid(ModelSpec(1, 5), 200, seed=12)
        plan = make_plan(200, h1=5, h2=3, seed=1)
        result = select_tau(panel, plan, TuningGrid((0.0, 50.0)), HARD, CvTarget.CORRELATION)
        assert result.selected == 0.0
        assert result.curve[0][1] < result.curve[1][1]

    def test_tie_resolves_to_smallest(self, gaussian_panel: TimeSeriesPanel) -> None:
        plan = make_plan(gaussian_panel.n, h1=4, h2=0)
        result = select_tau(gaussian_panel, plan, TuningGrid((50.0, 100.0)), HARD)
        assert result.curve[0][1] == result.curve[1][1]
        assert result.selected == 50.0

    def test_thread_count_does_not_change_curve(self, gaussian_panel: TimeSeriesPanel) -> None:
        plan = make_plan(gaussian_panel.n, h1=5, h2=4, seed=7)
        grid = TuningGrid.log_spaced(0.01, 1.0, 8)
        one = select_tau(gaussian_panel, plan, grid, HARD, threads=1)
        many = select_tau(gaussian_panel, plan, grid, HARD, threads=3)
        assert one == many

    def test_plan_must_match_panel(self, gaussian_panel: TimeSeriesPanel) -> None:
        with pytest.raises(BadParam):
            select_tau(gaussian_panel, make_plan(40, h1=4, h2=0), TuningGrid((0.1,)), HARD)


class TestSelectLambdaPrecision:
    def test_single_candidate(self, gaussian_panel: TimeSeriesPanel) -> None:
        plan = make_plan(gaussian_panel.n, h1=4, h2=0)
        result = select_lambda_precision(gaussian_panel, plan, TuningGrid((0.3,)), "spice")
        assert result.selected == 0.3

    def test_spice_curve_matches_direct_computation(self) -> None:
        panel = simulate_iid(ModelSpec(1, 4), 80, seed=4)
        plan = make_plan(80, h1=4, h2=0)
        grid = TuningGrid((0.01, 10.0))
        result = select_lambda_precision(panel, plan, grid, "spice")
        for value, loss in result.curve:
            losses = []
            for split in plan.splits:
                train = sample_covariance(panel.columns(split.training))
                valid = sample_covariance(panel.columns(split.validation))
                omega = spice_estimate(train, SpiceConfig(lambda2=value)).precision
                losses.append(precision_loss(omega, valid))
            assert loss == pytest.approx(float(np.mean(losses)), rel=1e-12)
        best = min(result.curve, key=lambda point: point[1])
        assert result.selected == best[0]

    def test_clime_runs_on_grid(self, gaussian_panel: TimeSeriesPanel) -> None:
        plan = make_plan(gaussian_panel.n, h1=4, h2=1, seed=2)
        grid = TuningGrid((0.1, 0.4))
        result = select_lambda_precision(gaussian_panel, plan, grid, "clime")
        assert result.selected in grid.values
        assert len(result.curve) == 2

    def test_rejects_zero_penalty(self, gaussian_panel: TimeSeriesPanel) -> None:
        plan = make_plan(gaussian_panel.n, h1=4, h2=0)
        with pytest.raises(BadParam):
            select_lambda_precision(gaussian_panel, plan, TuningGrid((0.0, 0.1)), "clime")


class TestPrecisionLoss:
    def test_identity(self) -> None:
        assert precision_loss(SymmetricMatrix.identity(3), SymmetricMatrix.identity(3)) == 3.0

    def test_indefinite_is_infinite(self) -> None:
        omega = SymmetricMatrix([[1.0, 2.0], [2.0, 1.0]])
        assert precision_loss(omega, SymmetricMatrix.identity(2)) == math.inf

    def test_even_number_of_negative_eigenvalues_is_infinite(self) -> None:
        omega = SymmetricMatrix(np.diag([-1.0, -1.0, 1.0]))
        assert precision_loss(omega, SymmetricMatrix.identity(3)) == math.inf

    def test_matches_log_determinant(self) -> None:
        a = np.random.default_rng(5).standard_normal((4, 4))
        omega = SymmetricMatrix(a @ a.T + np.eye(4))
        sigma = SymmetricMatrix(np.eye(4) + 0.1)
        _, logdet = np.linalg.slogdet(omega.values)
        expected = float(np.trace(omega.values @ sigma.values)) - logdet
        assert precision_loss(omega, sigma) == pytest.approx(expected, rel=1e-12)

    def test_result_dict_maps_infinite_loss(self) -> None:
        result = CvResult(selected=0.1, curve=((0.1, 1.0), (0.2, math.inf)), plan_digest="x")
        data = result.to_dict()
        assert data["cv_curve"] == [{"value": 0.1, "loss": 1.0}, {"value": 0.2, "loss": None}]
