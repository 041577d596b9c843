"""Benchmarks for pddcov — solver throughput, CV latency and simulator memory."""
