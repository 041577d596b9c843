"""CSV and console rendering of benchmark results."""
from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import TYPE_CHECKING

from rich.table import Table

from pddcov.bench.metrics import METRICS, SUPPORT_METRICS
from pddcov.linalg.csvio import CSV_FORMAT

if TYPE_CHECKING:
    from pddcov.bench.runner import BenchResult

CSV_COLUMNS: tuple[str, ...] = (
    "model",
    "p",
    "n",
    "alpha",
    "method",
    "metric",
    "mean",
    "sd",
    "replications",
    "failures",
)

# Header labels of the console table.
METRIC_LABELS: dict[str, str] = {
    "spectral": "Spectral",
    "frobenius": "Frobenius",
    "max": "Max",
    "tpr": "TPR",
    "fpr": "FPR",
    "sign": "Sign",
}


def _number(value: float) -> str:
    return "NA" if math.isnan(value) else CSV_FORMAT % value


def result_rows(result: BenchResult) -> list[dict[str, str]]:
    """One row per (method, metric) that has at least one measurement slot."""
    cfg = result.config
    alpha = "iid" if cfg.iid else CSV_FORMAT % cfg.alpha
    rows = []
    for method in result.methods:
        for metric in METRICS:
            summary = result.summary(method, metric)
            if metric in SUPPORT_METRICS and summary.count == 0:
                continue
            rows.append(
                {
                    "model": str(cfg.model),
                    "p": str(cfg.p),
                    "n": str(cfg.n),
                    "alpha": alpha,
                    "method": method,
                    "metric": metric,
                    "mean": _number(summary.mean),
                    "sd": _number(summary.sd),
                    "replications": str(summary.count),
                    "failures": str(result.failure_count(method)),
                }
            )
    return rows


def write_result_csv(result: BenchResult, path: str | Path) -> None:
    """Write ``result`` in the plot-ready long format."""
    with Path(path).open("w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(result_rows(result))


def result_table(result: BenchResult) -> Table:
    """Methods as rows, metrics as ``mean(SD)`` columns."""
    cfg = result.config
    alpha = "i.i.d." if cfg.iid else f"α={cfg.alpha:g}"
    shown = [
        metric
        for metric in METRICS
        if any(result.summary(m, metric).count for m in result.methods)
        or metric not in SUPPORT_METRICS
    ]
    table = Table(
        title=f"Model {cfg.model}, p={cfg.p}, n={cfg.n}, {alpha}, {cfg.replications} replications",
        show_header=True,
        header_style="bold cyan",
    )
    table.add_column("Method", style="bold")
    for metric in shown:
        table.add_column(METRIC_LABELS[metric], justify="right")
    table.add_column("Failures", justify="right")
    for method in result.methods:
        cells = [result.summary(method, metric).cell() for metric in shown]
        table.add_row(method, *cells, str(result.failure_count(method)))
    return table
