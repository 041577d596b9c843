"""Replication harness and evaluation metrics."""
from __future__ import annotations

from pddcov.bench.metrics import (
    METRICS,
    SUPPORT_METRICS,
    EvalReport,
    MetricSummary,
    aggregate,
    evaluate,
)
from pddcov.bench.report import CSV_COLUMNS, result_rows, result_table, write_result_csv
from pddcov.bench.runner import (
    BenchResult,
    ReplicationFailure,
    ReplicationOutcome,
    run_benchmark,
    run_replication,
    support_known,
    truth_for,
)

__all__ = [
    "CSV_COLUMNS",
    "METRICS",
    "SUPPORT_METRICS",
    "BenchResult",
    "EvalReport",
    "MetricSummary",
    "ReplicationFailure",
    "ReplicationOutcome",
    "aggregate",
    "evaluate",
    "result_rows",
    "result_table",
    "run_benchmark",
    "run_replication",
    "support_known",
    "truth_for",
    "write_result_csv",
]
