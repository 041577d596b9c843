"""Benchmark: precision-matrix solver throughput.

Measures how many full CLIME and SPICE fits complete per second on a
simulated Model-4 panel using the public pddcov APIs.
"""
from __future__ import annotations

import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import pddcov
from pddcov.clime import ClimeConfig, clime_estimate
from pddcov.linalg import SymmetricMatrix
from pddcov.moments import sample_covariance
from pddcov.spice import SpiceConfig, spice_estimate

_P: int = 50
_N: int = 200
_CLIME_ITERATIONS: int = 20
_SPICE_ITERATIONS: int = 50


def _sigma(p: int = _P, n: int = _N) -> SymmetricMatrix:
    panel, _ = pddcov.simulate(model=4, p=p, n=n, alpha="iid", seed=0)
    return sample_covariance(panel)


def _result(operation: str, iterations: int, total: float, p: int) -> dict[str, object]:
    return {
        "operation": operation,
        "p": p,
        "iterations": iterations,
        "total_seconds": round(total, 4),
        "ops_per_second": round(iterations / total, 2),
        "avg_latency_ms": round(total / iterations * 1000, 4),
    }


def bench_clime_throughput(iterations: int = _CLIME_ITERATIONS, p: int = _P) -> dict[str, object]:
    """Benchmark full CLIME fits (all columns, ADMM, one worker).

    Returns
    -------
    dict with keys: operation, p, iterations, total_seconds, ops_per_second,
    avg_latency_ms.
    """
    sigma = _sigma(p)
    cfg = ClimeConfig(lambda1=0.1)
    start = time.perf_counter()
    for _ in range(iterations):
        clime_estimate(sigma, cfg, n=_N, threads=1)
    total = time.perf_counter() - start

    result = _result("clime_fit_throughput", iterations, total, p)
    print(
        f"[bench_throughput] {result['operation']}: "
        f"{result['ops_per_second']:,.2f} fits/sec  "
        f"avg {result['avg_latency_ms']:.2f} ms"
    )
    return result


def bench_spice_throughput(iterations: int = _SPICE_ITERATIONS, p: int = _P) -> dict[str, object]:
    """Benchmark full SPICE fits from the identity start.

    Returns
    -------
    dict with keys: operation, p, iterations, total_seconds, ops_per_second,
    avg_latency_ms.
    """
    sigma = _sigma(p)
    cfg = SpiceConfig(lambda2=0.1)
    start = time.perf_counter()
    for _ in range(iterations):
        spice_estimate(sigma, cfg)
    total = time.perf_counter() - start

    result = _result("spice_fit_throughput", iterations, total, p)
    print(
        f"[bench_throughput] {result['operation']}: "
        f"{result['ops_per_second']:,.2f} fits/sec  "
        f"avg {result['avg_latency_ms']:.2f} ms"
    )
    return result


if __name__ == "__main__":
    results_dir = Path(__file__).parent / "results"
    results_dir.mkdir(exist_ok=True)

    for bench_fn, fname in [
        (bench_clime_throughput, "clime_throughput_baseline.json"),
        (bench_spice_throughput, "spice_throughput_baseline.json"),
    ]:
        result = bench_fn()
        output_path = results_dir / fname
        with open(output_path, "w", encoding="utf-8") as fh:
            json.dump(result, fh, indent=2)
        print(f"Results saved to {output_path}")
