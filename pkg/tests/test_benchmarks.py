"""Structural tests for the pddcov benchmark module."""
from __future__ import annotations

import importlib
import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).parent.parent / "benchmarks"))


@pytest.mark.parametrize(
    ("module", "attribute"),
    [
        ("bench_throughput", "bench_clime_throughput"),
        ("bench_throughput", "bench_spice_throughput"),
        ("bench_latency", "bench_cv_latency"),
        ("bench_memory", "bench_simulate_memory"),
        ("compare", "build_table"),
    ],
)
def test_bench_modules_importable(module: str, attribute: str) -> None:
    """Verify each benchmark module exposes its entry point."""
    mod = importlib.import_module(module)
    assert hasattr(mod, attribute)


def test_clime_throughput_returns_expected_keys() -> None:
    from bench_throughput import bench_clime_throughput

    result = bench_clime_throughput(iterations=1, p=8)
    assert result["operation"] == "clime_fit_throughput"
    assert result["iterations"] == 1
    assert float(result["ops_per_second"]) > 0  # type: ignore[arg-type]


def test_spice_throughput_returns_expected_keys() -> None:
    from bench_throughput import bench_spice_throughput

    result = bench_spice_throughput(iterations=2, p=8)
    assert "avg_latency_ms" in result
    assert float(result["ops_per_second"]) > 0  # type: ignore[arg-type]


def test_cv_latency_percentiles_are_ordered() -> None:
    from bench_latency import bench_cv_latency

    result = bench_cv_latency(iterations=3, p=10, n=80)
    assert float(result["p50_ms"]) <= float(result["p95_ms"])  # type: ignore[arg-type]


def test_simulate_memory_reports_peak() -> None:
    from bench_memory import bench_simulate_memory

    result = bench_simulate_memory(iterations=1, p=5, n=100)
    assert float(result["peak_memory_kb"]) > 0  # type: ignore[arg-type]


def test_compare_table_marks_missing_results(tmp_path: Path) -> None:
    from compare import RESULT_FILES, build_table

    (tmp_path / "latency_baseline.json").write_text(
        json.dumps({"operation": "cv_hard_threshold_latency", "avg_latency_ms": 2.5}),
        encoding="utf-8",
    )
    table = build_table(tmp_path)
    assert table.row_count == len(RESULT_FILES)
