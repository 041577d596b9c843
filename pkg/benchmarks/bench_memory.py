"""Benchmark: memory held while simulating long-memory panels."""
from __future__ import annotations

import json
import sys
import tracemalloc
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import pddcov

_ITERATIONS: int = 10


def bench_simulate_memory(
    iterations: int = _ITERATIONS, p: int = 100, n: int = 2000
) -> dict[str, object]:
    """Benchmark peak traced memory of ``pddcov.simulate`` at ``alpha=0.5``.

    Returns
    -------
    dict with keys: operation, iterations, peak_memory_kb, current_memory_kb.
    """
    tracemalloc.start()
    for seed in range(iterations):
        pddcov.simulate(model=1, p=p, n=n, alpha=0.5, seed=seed)
    current, peak = tracemalloc.get_traced_memory()
    tracemalloc.stop()

    result: dict[str, object] = {
        "operation": "simulate_memory",
        "iterations": iterations,
        "peak_memory_kb": round(peak / 1024, 2),
        "current_memory_kb": round(current / 1024, 2),
        "ops_per_second": 0.0,
        "avg_latency_ms": 0.0,
    }
    print(
        f"[bench_memory] {result['operation']}: peak {result['peak_memory_kb']:.2f} KB "
        f"over {iterations} panels of {p} x {n}"
    )
    return result


if __name__ == "__main__":
    result = bench_simulate_memory()
    results_dir = Path(__file__).parent / "results"
    results_dir.mkdir(exist_ok=True)
    output_path = results_dir / "memory_baseline.json"
    with open(output_path, "w", encoding="utf-8") as fh:
        json.dump(result, fh, indent=2)
    print(f"Results saved to {output_path}")
