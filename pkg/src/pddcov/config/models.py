"""Schemas of the JSON run configurations.

Two documents are recognised: a benchmark configuration (simulation grid
plus methods) and an estimate configuration (one method applied to a
panel file), the latter identified by its ``method`` key.  Unknown keys are
rejected.
"""
from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from pddcov.core.errors import BadParam
from pddcov.pdd_rates.formulas import is_iid, parse_alpha

DEFAULT_METHODS: dict[int, tuple[str, ...]] = {
    1: ("sample", "hard", "soft"),
    2: ("sample", "hard", "soft"),
    3: ("sample_inverse", "clime", "spice"),
    4: ("sample_inverse", "clime", "spice"),
}


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class CvSettings(_Strict):
    """Cross-validation scheme and candidate grids."""

    scheme: Literal["auto", "gap_block", "kfold"] = "auto"
    kfold: int = Field(default=10, ge=2)
    grid_size: int = Field(default=20, ge=1)
    tau_min: float = Field(default=0.01, gt=0)
    tau_max: float = Field(default=1.0, gt=0)
    lambda_min: float = Field(default=0.01, gt=0)
    lambda_max: float = Field(default=1.0, gt=0)

    @model_validator(mode="after")
    def _ordered(self) -> CvSettings:
        if self.tau_min >= self.tau_max:
            raise ValueError("tau_min must be below tau_max")
        if self.lambda_min >= self.lambda_max:
            raise ValueError("lambda_min must be below lambda_max")
        return self


class BenchConfig(_Strict):
    """One cell of the simulation tables.

    ``alpha`` accepts a positive number or ``"iid"``/``"inf"``; it is
    stored as a float with ``math.inf`` for the i.i.d. case.
    """

    model: Literal[1, 2, 3, 4]
    p: int = Field(ge=2)
    n: int = Field(ge=2)
    alpha: float
    replications: int = Field(default=20, ge=1)
    methods: tuple[str, ...] | None = None
    h1: int = Field(default=10, ge=4)
    h2: int = Field(default=10, ge=0)
    cv: CvSettings = Field(default_factory=CvSettings)
    threshold_target: Literal["corr", "cov"] = "corr"
    scad_a: float = Field(default=3.7, gt=2)
    alasso_eta: float = Field(default=1.0, ge=1)
    n_terms: int = Field(default=8, ge=2)
    fit_tol: float = Field(default=0.05, gt=0)
    seed: int = Field(default=0, ge=0)

    @field_validator("alpha", mode="before")
    @classmethod
    def _parse_alpha(cls, value: object) -> float:
        if isinstance(value, bool) or not isinstance(value, (int, float, str)):
            raise ValueError("alpha must be a positive number, 'iid' or 'inf'")
        try:
            return parse_alpha(value)
        except BadParam as exc:
            raise ValueError(str(exc)) from None

    @property
    def iid(self) -> bool:
        return is_iid(self.alpha)

    def resolved_methods(self) -> tuple[str, ...]:
        """Configured methods, or the defaults for the model."""
        return self.methods if self.methods else DEFAULT_METHODS[self.model]


class EstimateConfig(_Strict):
    """One estimator applied to a panel file."""

    method: str
    input: str
    transpose: bool = False
    tuning: float | None = Field(default=None, ge=0)
    epsilon: float | None = Field(default=None, ge=0)
    xi: float | None = Field(default=None, ge=0)
    solver: Literal["admm", "lp"] = "admm"
    grid: str = "auto"
    h1: int = Field(default=10, ge=4)
    h2: int = Field(default=10, ge=0)
    cv: CvSettings = Field(default_factory=CvSettings)
    target: Literal["corr", "cov"] = "corr"
    scad_a: float = Field(default=3.7, gt=2)
    alasso_eta: float = Field(default=1.0, ge=1)
    seed: int = Field(default=0, ge=0)
