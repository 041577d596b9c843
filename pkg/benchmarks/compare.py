"""Comparison table for pddcov benchmark results."""
from __future__ import annotations

import json
from pathlib import Path

from rich.console import Console
from rich.table import Table

RESULT_FILES: tuple[str, ...] = (
    "clime_throughput_baseline.json",
    "spice_throughput_baseline.json",
    "latency_baseline.json",
    "memory_baseline.json",
)


def _load(path: Path) -> dict[str, object] | None:
    if not path.exists():
        return None
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)  # type: ignore[no-any-return]


def build_table(results_dir: Path) -> Table:
    """One row per baseline file; missing files are listed as not run."""
    table = Table(title="pddcov Benchmark Results", header_style="bold cyan")
    table.add_column("Operation", style="bold")
    table.add_column("Ops/sec", justify="right")
    table.add_column("Avg latency", justify="right")
    table.add_column("Peak memory", justify="right")
    for fname in RESULT_FILES:
        data = _load(results_dir / fname)
        if data is None:
            table.add_row(fname, "not run", "", "")
            continue
        ops_sec = float(data.get("ops_per_second", 0))  # type: ignore[arg-type]
        avg_lat = float(data.get("avg_latency_ms", 0))  # type: ignore[arg-type]
        peak_kb = float(data.get("peak_memory_kb", 0))  # type: ignore[arg-type]
        table.add_row(
            str(data.get("operation", fname)),
            f"{ops_sec:,.2f}" if ops_sec > 0 else "n/a",
            f"{avg_lat:.2f}ms" if avg_lat > 0 else "n/a",
            f"{peak_kb:,.0f}KB" if peak_kb > 0 else "n/a",
        )
    return table


def main() -> None:
    console = Console()
    console.print(build_table(Path(__file__).parent / "results"))
    console.print("Missing rows: run the bench_*.py scripts in benchmarks/ first.")


if __name__ == "__main__":
    main()
