"""Benchmark: cross-validated thresholding latency (p50/p95/mean).

Times one gap-block cross-validation of the hard-threshold level,
including every split's sample moments, on a simulated long-memory panel.
"""
from __future__ import annotations

import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import pddcov
from pddcov.crossval import TuningGrid, make_plan, select_tau
from pddcov.threshold import ThresholdKind, ThresholdRule

_WARMUP: int = 2
_ITERATIONS: int = 30


def bench_cv_latency(
    iterations: int = _ITERATIONS, p: int = 100, n: int = 200
) -> dict[str, object]:
    """Benchmark ``select_tau`` latency on a Model-2 panel.

    Returns
    -------
    dict with keys: operation, iterations, total_seconds, ops_per_second,
    avg_latency_ms, p50_ms, p95_ms.
    """
    panel, _ = pddcov.simulate(model=2, p=p, n=n, alpha=0.5, seed=0)
    plan = make_plan(n, h1=10, h2=10, seed=0)
    grid = TuningGrid.log_spaced(0.01, 1.0, 20)
    rule = ThresholdRule(ThresholdKind.HARD)

    for _ in range(_WARMUP):
        select_tau(panel, plan, grid, rule, threads=1)

    latencies_ms: list[float] = []
    for _ in range(iterations):
        t0 = time.perf_counter()
        select_tau(panel, plan, grid, rule, threads=1)
        latencies_ms.append((time.perf_counter() - t0) * 1000)

    sorted_lats = sorted(latencies_ms)
    count = len(sorted_lats)
    total = sum(latencies_ms) / 1000

    result: dict[str, object] = {
        "operation": "cv_hard_threshold_latency",
        "iterations": iterations,
        "total_seconds": round(total, 4),
        "ops_per_second": round(iterations / total, 1),
        "avg_latency_ms": round(sum(latencies_ms) / count, 4),
        "p50_ms": round(sorted_lats[int(count * 0.50)], 4),
        "p95_ms": round(sorted_lats[min(int(count * 0.95), count - 1)], 4),
    }
    print(
        f"[bench_latency] {result['operation']}: "
        f"p50={result['p50_ms']:.2f}ms  p95={result['p95_ms']:.2f}ms  "
        f"mean={result['avg_latency_ms']:.2f}ms"
    )
    return result


if __name__ == "__main__":
    result = bench_cv_latency()
    results_dir = Path(__file__).parent / "results"
    results_dir.mkdir(exist_ok=True)
    output_path = results_dir / "latency_baseline.json"
    with open(output_path, "w", encoding="utf-8") as fh:
        json.dump(result, fh, indent=2)
    print(f"Results saved to {output_path}")
