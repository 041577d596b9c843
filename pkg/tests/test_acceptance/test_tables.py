"""Acceptance checks on simulated replications.

Desk-scale versions of the published simulation tables: orderings and
loose magnitudes of the losses, support recovery, and bit-identical output
across worker counts.  The larger runs are marked ``slow``.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from pddcov.bench import BenchResult, run_benchmark
from pddcov.cli.main import dispatch
from pddcov.clime import ClimeConfig, clime_estimate, clime_hard_threshold
from pddcov.config import BenchConfig
from pddcov.crossval import CvTarget, TuningGrid, make_plan, select_tau
from pddcov.linalg import SymmetricMatrix, inverse
from pddcov.moments import TimeSeriesPanel, sample_covariance
from pddcov.pdd_rates import (
    IID_ALPHA,
    RateInput,
    irrepresentability,
    lambda_prime,
    tau_prime,
)
from pddcov.simulate import ModelSpec, build_model, simulate_iid, simulate_panel
from pddcov.spice import SpiceConfig, spice_estimate
from pddcov.threshold import ThresholdKind, ThresholdRule, threshold_covariance


def _bench(**fields: object) -> BenchResult:
    document: dict[str, object] = {"p": 100, "n": 200, "replications": 20, "seed": 2024}
    document.update(fields)
    return run_benchmark(BenchConfig.model_validate(document))


def _mean(result: BenchResult, method: str, metric: str) -> float:
    return result.summary(method, metric).mean


# ---------------------------------------------------------------------------
# Covariance tables
# ---------------------------------------------------------------------------


class TestThresholdingTable:
    def test_short_memory_ordering(self) -> None:
        result = _bench(model=1, alpha=2.0, methods=["sample", "hard", "soft"])
        sample = _mean(result, "sample", "spectral")
        hard = _mean(result, "hard", "spectral")
        soft = _mean(result, "soft", "spectral")
        assert sample >= 1.5 * soft
        assert sample >= 1.5 * hard
        assert sample == pytest.approx(2.6, rel=0.5)
        assert soft == pytest.approx(1.5, rel=0.5)
        assert hard == pytest.approx(1.1, rel=0.5)

    def test_long_memory_costs_accuracy(self) -> None:
        long = _bench(model=1, alpha=0.1, methods=["hard"])
        short = _bench(model=1, alpha=2.0, methods=["hard"])
        assert _mean(long, "hard", "spectral") >= 2.0 * _mean(short, "hard", "spectral")

    def test_support_recovery_iid(self) -> None:
        result = _bench(model=2, alpha="iid", methods=["hard", "soft"])
        assert _mean(result, "hard", "tpr") >= 0.85
        assert _mean(result, "hard", "fpr") <= 0.01
        assert _mean(result, "soft", "tpr") >= 0.95
        assert _mean(result, "soft", "fpr") <= 0.20


@pytest.mark.slow
class TestCrossValidatedThreshold:
    def test_selected_tau_tracks_oracle(self) -> None:
        spec = ModelSpec(2, 50)
        sigma = build_model(spec).sigma.values
        grid = TuningGrid.log_spaced(0.01, 1.0, 20)
        rule = ThresholdRule(ThresholdKind.SOFT)
        close = 0
        for replication in range(50):
            panel, _ = simulate_panel(spec, 200, 1.0, seed=replication)
            plan = make_plan(panel.n, h1=10, h2=10, seed=replication)
            selected = select_tau(panel, plan, grid, rule, CvTarget.COVARIANCE).selected
            estimate = sample_covariance(panel)
            true_loss = [
                float(np.linalg.norm(threshold_covariance(estimate, tau, rule).values - sigma))
                for tau in grid.values
            ]
            oracle = int(np.argmin(true_loss))
            close += abs(grid.values.index(selected) - oracle) <= 1
        assert close >= 35


# ---------------------------------------------------------------------------
# Precision table
# ---------------------------------------------------------------------------


@pytest.mark.slow
class TestPrecisionTable:
    def test_penalised_estimators_beat_inverse(self) -> None:
        result = _bench(model=4, alpha="iid", methods=["sample_inverse", "clime", "spice"])
        baseline = _mean(result, "sample_inverse", "spectral")
        assert _mean(result, "clime", "spectral") < 0.3 * baseline
        assert _mean(result, "spice", "spectral") < 0.3 * baseline


# ---------------------------------------------------------------------------
# Support recovery
# ---------------------------------------------------------------------------


@pytest.mark.slow
class TestSparsistency:
    def test_thresholding_keeps_true_zeros(self) -> None:
        result = _bench(model=2, alpha=0.5, methods=["hard"])
        assert 1.0 - _mean(result, "hard", "fpr") >= 0.95

    def test_clime_sign_consistency(self) -> None:
        spec = ModelSpec(4, 10)
        omega = build_model(spec).omega.values
        n = 2000
        m_p = float(np.max(np.sum(np.abs(omega), axis=1)))
        lambda1 = lambda_prime(RateInput(n=n, p=spec.p, alpha=IID_ALPHA, m_p=m_p))
        large = np.abs(omega) > 2.0 * lambda1
        agree = 0
        for replication in range(50):
            panel = simulate_iid(spec, n, seed=replication)
            cfg = ClimeConfig(lambda1=lambda1)
            fit = clime_estimate(sample_covariance(panel), cfg, n=n)
            estimate = clime_hard_threshold(fit.precision, lambda1).values
            agree += bool(np.all(np.sign(estimate[large]) == np.sign(omega[large])))
        assert agree >= 45

    def test_spice_recovers_zeros_under_irrepresentability(self) -> None:
        p, n, r = 10, 1000, 0.5
        corr = np.eye(p)
        edges = np.zeros((p, p), dtype=bool)
        for i in range(0, p, 2):
            corr[i, i + 1] = corr[i + 1, i] = -r
            edges[i, i + 1] = edges[i + 1, i] = True
        zeros = ~edges & ~np.eye(p, dtype=bool)
        truth = SymmetricMatrix(corr)
        omega = inverse(truth).values
        support = {(int(i), int(j)) for i, j in zip(*np.nonzero(edges))}
        report = irrepresentability(truth, support)
        assert report.beta > 0.0
        lambda2 = report.lambda_scale(tau_prime(RateInput(n=n, p=p, alpha=IID_ALPHA)))
        assert lambda2 < float(np.max(np.abs(corr[edges])))
        chol = np.linalg.cholesky(corr)
        recovered = 0
        for replication in range(50):
            noise = np.random.default_rng(1000 + replication).standard_normal((p, n))
            panel = TimeSeriesPanel(chol @ noise)
            fit = spice_estimate(sample_covariance(panel), SpiceConfig(lambda2=lambda2))
            estimate = fit.precision.values
            recovered += bool(
                np.all(estimate[zeros] == 0.0)
                and np.all(np.sign(estimate[edges]) == np.sign(omega[edges]))
            )
        assert recovered >= 45


# ---------------------------------------------------------------------------
# Determinism
# ---------------------------------------------------------------------------


@pytest.mark.slow
def test_bench_is_bit_identical_across_thread_counts(tmp_path: Path) -> None:
    config = tmp_path / "bench.json"
    document = {
        "model": 4,
        "p": 30,
        "n": 200,
        "alpha": 0.5,
        "replications": 8,
        "methods": ["sample_inverse", "clime", "spice"],
        "cv": {"grid_size": 6},
        "seed": 11,
    }
    config.write_text(json.dumps(document), encoding="utf-8")
    outputs = []
    for threads in ("1", "4"):
        out = tmp_path / f"results-{threads}.csv"
        argv = ["--threads", threads, "bench", "--config", str(config), "--out", str(out)]
        assert dispatch(argv) == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
