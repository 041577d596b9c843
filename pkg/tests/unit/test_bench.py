"""Unit tests for pddcov.bench — metrics, aggregation, reports and the harness."""
from __future__ import annotations

import csv
import math
from collections.abc import Iterator
from pathlib import Path

import numpy as np
import pytest

from pddcov.bench import (
    CSV_COLUMNS,
    METRICS,
    SUPPORT_METRICS,
    MetricSummary,
    aggregate,
    evaluate,
    result_rows,
    run_benchmark,
    run_replication,
    support_known,
)
from pddcov.config import BenchConfig
from pddcov.core.errors import BadInput, BenchAborted, DimMismatch, UnknownMethod
from pddcov.estimators import Estimate, EstimateKind, Estimator, FitContext, registry
from pddcov.linalg import SymmetricMatrix
from pddcov.moments import TimeSeriesPanel
from pddcov.simulate import ModelSpec
from tests.oracles import count_rates, welford


def _config(**overrides: object) -> BenchConfig:
    base: dict[str, object] = {
        "model": 2,
        "p": 5,
        "n": 100,
        "alpha": "iid",
        "replications": 3,
        "methods": ["sample", "hard"],
        "h1": 4,
        "h2": 2,
        "cv": {"kfold": 5, "grid_size": 5},
        "seed": 17,
    }
    base.update(overrides)
    return BenchConfig.model_validate(base)


class FailingEstimator(Estimator):
    name = "always_fails"

    def fit(self, panel: TimeSeriesPanel, ctx: FitContext) -> Estimate:
        raise BadInput("always fails")


@pytest.fixture()
def failing_method() -> Iterator[str]:
    registry.register_class("always_fails", FailingEstimator)
    try:
        yield "always_fails"
    finally:
        registry.deregister("always_fails")


# ---------------------------------------------------------------------------
# evaluate
# ---------------------------------------------------------------------------


class TestEvaluate:
    def test_rates_on_small_example(self) -> None:
        truth = SymmetricMatrix([[1.0, 0.5, 0.0], [0.5, 1.0, 0.0], [0.0, 0.0, 1.0]])
        estimate = SymmetricMatrix([[1.0, 0.4, 0.1], [0.4, 1.0, 0.0], [0.1, 0.0, 1.0]])
        report = evaluate(estimate, truth, off_diagonal_support_known=True)
        assert report.tpr == 1.0
        assert report.fpr == 0.5
        assert report.sign_consistent is True
        assert report.metric("sign") == 1.0
        assert report.max_loss == pytest.approx(0.1)

    def test_flipped_sign_is_inconsistent(self) -> None:
        truth = SymmetricMatrix([[1.0, 0.5], [0.5, 1.0]])
        estimate = SymmetricMatrix([[1.0, -0.2], [-0.2, 1.0]])
        report = evaluate(estimate, truth, off_diagonal_support_known=True)
        assert report.tpr == 1.0
        assert report.sign_consistent is False
        assert report.metric("sign") == 0.0

    @pytest.mark.parametrize("seed", range(5))
    def test_rates_match_explicit_count(self, seed: int) -> None:
        rng = np.random.default_rng(seed)
        p = 9
        truth = np.where(rng.random((p, p)) < 0.3, 0.4, 0.0)
        truth = np.triu(truth, 1) + np.triu(truth, 1).T + np.eye(p)
        estimate = np.where(rng.random((p, p)) < 0.4, rng.standard_normal((p, p)), 0.0)
        estimate = np.triu(estimate, 1) + np.triu(estimate, 1).T + np.eye(p)
        report = evaluate(SymmetricMatrix(estimate), SymmetricMatrix(truth), True)
        assert (report.tpr, report.fpr) == pytest.approx(count_rates(estimate, truth))

    def test_empty_support_is_vacuous(self) -> None:
        identity = SymmetricMatrix.identity(4)
        report = evaluate(identity, identity, off_diagonal_support_known=True)
        assert report.tpr == 1.0
        assert report.fpr == 0.0

    def test_unknown_support_has_no_rates(self) -> None:
        identity = SymmetricMatrix.identity(3)
        report = evaluate(identity, identity, off_diagonal_support_known=False)
        assert report.tpr is None
        assert report.metric("fpr") is None
        assert report.metric("sign") is None
        assert report.metric("spectral") == 0.0

    def test_dimension_mismatch(self) -> None:
        with pytest.raises(DimMismatch):
            evaluate(SymmetricMatrix.identity(2), SymmetricMatrix.identity(3), True)


# ---------------------------------------------------------------------------
# aggregate
# ---------------------------------------------------------------------------


class TestAggregate:
    def test_matches_streaming_reference(self, rng: np.random.Generator) -> None:
        values = list(rng.standard_normal(57) * 3.0 + 1.0)
        mean, sd = welford(values)
        summary = aggregate(values)
        assert summary.mean == pytest.approx(mean, rel=1e-12)
        assert summary.sd == pytest.approx(sd, rel=1e-12)
        assert summary.count == 57

    def test_missing_values_are_skipped(self) -> None:
        summary = aggregate([1.0, math.nan, 3.0])
        assert summary.count == 2
        assert summary.mean == 2.0

    def test_single_value(self) -> None:
        summary = aggregate([0.25])
        assert summary.mean == 0.25
        assert math.isnan(summary.sd)
        assert summary.cell() == "0.25"

    def test_cells(self) -> None:
        assert aggregate([]).cell() == "N/A"
        assert MetricSummary(1.234, 0.056, 4).cell() == "1.23(0.06)"


# ---------------------------------------------------------------------------
# Harness
# ---------------------------------------------------------------------------


class TestSupportKnown:
    def test_only_the_sparse_matrix_the_model_defines(self) -> None:
        assert support_known(ModelSpec(2, 5), EstimateKind.CORRELATION)
        assert not support_known(ModelSpec(2, 5), EstimateKind.PRECISION)
        assert support_known(ModelSpec(4, 5), EstimateKind.PRECISION)
        assert not support_known(ModelSpec(3, 5), EstimateKind.PRECISION)


class TestRunBenchmark:
    def test_deterministic(self) -> None:
        cfg = _config()
        first = run_benchmark(cfg, threads=1)
        second = run_benchmark(cfg, threads=1)
        assert first.summaries == second.summaries

    def test_thread_count_does_not_change_result(self) -> None:
        cfg = _config(alpha=0.5, cv={"scheme": "gap_block", "grid_size": 4})
        one = run_benchmark(cfg, threads=1)
        many = run_benchmark(cfg, threads=3)
        assert one.summaries == many.summaries
        assert [o.tuning for o in one.outcomes] == [o.tuning for o in many.outcomes]

    def test_replications_differ(self) -> None:
        result = run_benchmark(_config(), threads=1)
        reports = [o.reports["sample"] for o in result.outcomes]
        spectral = [r.spectral_loss for r in reports if r is not None]
        assert len(set(spectral)) == 3

    def test_replication_is_independent_of_the_run(self) -> None:
        cfg = _config()
        alone = run_replication(cfg, 2)
        assert run_benchmark(cfg, threads=2).outcomes[2] == alone

    def test_singular_sample_inverse_is_not_available(self) -> None:
        cfg = _config(
            model=3,
            p=20,
            n=16,
            methods=["sample_inverse"],
            replications=2,
            cv={"scheme": "gap_block"},
        )
        result = run_benchmark(cfg, threads=1)
        assert all(o.reports["sample_inverse"] is None for o in result.outcomes)
        assert result.summary("sample_inverse", "spectral").cell() == "N/A"
        assert result.failures == ()

    def test_aborts_when_failures_accumulate(self, failing_method: str) -> None:
        with pytest.raises(BenchAborted) as info:
            run_benchmark(_config(methods=["sample", failing_method]), threads=1)
        assert info.value.failures == 3
        assert info.value.replications == 3

    def test_unknown_method(self) -> None:
        with pytest.raises(UnknownMethod):
            run_benchmark(_config(methods=["banded"]))

    def test_default_methods(self) -> None:
        cfg = _config(methods=None, replications=1)
        assert run_benchmark(cfg).methods == ("sample", "hard", "soft")


class TestReport:
    def test_rows_and_csv(self, tmp_path: Path) -> None:
        result = run_benchmark(_config(), threads=1)
        rows = result_rows(result)
        assert {row["alpha"] for row in rows} == {"iid"}
        assert {row["metric"] for row in rows} == set(METRICS)
        assert len(rows) == 2 * len(METRICS)
        sign_rows = [row for row in rows if row["metric"] == "sign"]
        assert all(0.0 <= float(row["mean"]) <= 1.0 for row in sign_rows)
        path = tmp_path / "result.csv"
        result.to_csv(path)
        with path.open(encoding="utf-8") as handle:
            read = list(csv.DictReader(handle))
        assert tuple(read[0]) == CSV_COLUMNS
        assert read == rows

    def test_missing_values_are_na(self) -> None:
        cfg = _config(
            model=3,
            p=20,
            n=16,
            methods=["sample_inverse"],
            replications=1,
            cv={"scheme": "gap_block"},
        )
        rows = result_rows(run_benchmark(cfg, threads=1))
        assert rows
        assert all(row["mean"] == "NA" and row["sd"] == "NA" for row in rows)
        assert all(row["metric"] not in SUPPORT_METRICS for row in rows)

    def test_table_renders(self) -> None:
        table = run_benchmark(_config(), threads=1).render_table()
        assert table.row_count == 2
