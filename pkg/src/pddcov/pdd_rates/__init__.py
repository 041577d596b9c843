"""Dependence-class bookkeeping: rates, block size, budget, α fitting, diagnostics."""
from __future__ import annotations

from pddcov.pdd_rates.alpha_fit import (
    AlphaEstimate,
    AlphaMode,
    PowerLawFit,
    estimate_alpha,
    fit_power_law,
)
from pddcov.pdd_rates.formulas import (
    IID_ALPHA,
    PddSpec,
    RateInput,
    block_size_f,
    g_bound,
    is_iid,
    lambda_prime,
    parse_alpha,
    tau_prime,
    tau_zero,
)
from pddcov.pdd_rates.irrepresentability import (
    IrrepresentabilityReport,
    irrepresentability,
    support_of,
)

__all__ = [
    "IID_ALPHA",
    "AlphaEstimate",
    "AlphaMode",
    "IrrepresentabilityReport",
    "PddSpec",
    "PowerLawFit",
    "RateInput",
    "block_size_f",
    "estimate_alpha",
    "fit_power_law",
    "g_bound",
    "irrepresentability",
    "is_iid",
    "lambda_prime",
    "parse_alpha",
    "support_of",
    "tau_prime",
    "tau_zero",
]
