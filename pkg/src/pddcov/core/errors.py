"""Error types for pddcov.

Every failure raised by the library derives from ``PddcovError``.  Concrete
errors are frozen dataclasses so that they carry structured, inspectable
fields (the offending index, the bound that was violated, ...) in addition
to a human-readable message.  The CLI serialises them through
``PddcovError.details`` into a JSON diagnostic on stderr.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field, is_dataclass
from typing import Any, ClassVar


class PddcovError(Exception):
    """Base class for all pddcov errors.

    Subclasses define ``code`` (a stable machine-readable identifier) and
    implement ``__str__``.
    """

    code: ClassVar[str] = "PDD000"

    # dataclass(frozen=True) subclasses don't call Exception.__init__
    def __post_init__(self) -> None:
        object.__setattr__(self, "args", (str(self),))

    def details(self) -> dict[str, Any]:
        """Return a JSON-ready description of this error."""
        fields = asdict(self) if is_dataclass(self) else {}
        return {"error": type(self).__name__, "code": self.code, "message": str(self), **fields}


# ---------------------------------------------------------------------------
# Input validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BadParam(PddcovError):
    """A scalar parameter is outside its admissible range."""

    code: ClassVar[str] = "PDD001"

    name: str
    value: float | int | str | None
    reason: str

    def __str__(self) -> str:
        return f"Bad parameter {self.name}={self.value!r}: {self.reason}"


@dataclass(frozen=True)
class BadInput(PddcovError):
    """Input data violates a structural precondition."""

    code: ClassVar[str] = "PDD002"

    reason: str

    def __str__(self) -> str:
        return f"Bad input: {self.reason}"


@dataclass(frozen=True)
class DegenerateInput(PddcovError):
    """Too few observations to form the requested statistic."""

    code: ClassVar[str] = "PDD003"

    n: int
    minimum: int

    def __str__(self) -> str:
        return f"Degenerate input: n={self.n} observations, at least {self.minimum} required"


@dataclass(frozen=True)
class DimMismatch(PddcovError):
    """Two operands have incompatible shapes."""

    code: ClassVar[str] = "PDD004"

    left: tuple[int, ...]
    right: tuple[int, ...]

    def __str__(self) -> str:
        return f"Dimension mismatch: {self.left} vs {self.right}"


@dataclass(frozen=True)
class DimensionOverflow(PddcovError):
    """A dense result would exceed the entry budget."""

    code: ClassVar[str] = "PDD005"

    entries: int
    limit: int

    def __str__(self) -> str:
        return f"Result would hold {self.entries} entries, budget is {self.limit}"


@dataclass(frozen=True)
class BadLag(PddcovError):
    """A lag is outside ``[minimum, maximum]``."""

    code: ClassVar[str] = "PDD006"

    lag: int
    minimum: int
    maximum: int

    def __str__(self) -> str:
        return f"Lag {self.lag} outside admissible range [{self.minimum}, {self.maximum}]"


@dataclass(frozen=True)
class ZeroVariance(PddcovError):
    """Series ``index`` has zero (or negative) sample variance."""

    code: ClassVar[str] = "PDD007"

    index: int
    variance: float = 0.0

    def __str__(self) -> str:
        return f"Series {self.index} has non-positive sample variance {self.variance!r}"


@dataclass(frozen=True)
class BadDiagonal(PddcovError):
    """A matrix diagonal entry is not strictly positive."""

    code: ClassVar[str] = "PDD008"

    index: int
    value: float

    def __str__(self) -> str:
        return f"Diagonal entry {self.index} is {self.value!r}, must be positive"


# ---------------------------------------------------------------------------
# Numerical failures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SingularMatrix(PddcovError):
    """Matrix is numerically singular (``min|λ| <= 1e-12 max|λ|``)."""

    code: ClassVar[str] = "PDD010"

    min_abs_eigenvalue: float
    max_abs_eigenvalue: float

    def __str__(self) -> str:
        return (
            "Matrix is numerically singular: "
            f"min |eigenvalue| {self.min_abs_eigenvalue:.3e}, "
            f"max |eigenvalue| {self.max_abs_eigenvalue:.3e}"
        )


@dataclass(frozen=True)
class NotPositiveDefinite(PddcovError):
    """Matrix that must be positive definite is not."""

    code: ClassVar[str] = "PDD011"

    min_eigenvalue: float
    what: str = "matrix"

    def __str__(self) -> str:
        return f"{self.what} is not positive definite (min eigenvalue {self.min_eigenvalue:.3e})"


@dataclass(frozen=True)
class Infeasible(PddcovError):
    """CLIME column problem has an empty feasible set.

    ``lower_bound`` is a certified lower bound on ``|Σ̃β − e_i|_∞`` over all β.
    """

    code: ClassVar[str] = "PDD012"

    column: int
    lambda1: float
    lower_bound: float

    def __str__(self) -> str:
        return (
            f"Column {self.column} is infeasible: lambda1={self.lambda1!r} is below "
            f"the certified residual bound {self.lower_bound:.6g}"
        )


@dataclass(frozen=True)
class NotConverged(PddcovError):
    """Iterative solver hit ``max_iter`` before reaching tolerance."""

    code: ClassVar[str] = "PDD013"

    solver: str
    max_iter: int
    final_gap: float
    column: int | None = field(default=None)

    def __str__(self) -> str:
        where = f" (column {self.column})" if self.column is not None else ""
        return (
            f"{self.solver} did not converge after {self.max_iter} iterations{where}; "
            f"final gap {self.final_gap:.3e}"
        )


@dataclass(frozen=True)
class IndefiniteEstimate(PddcovError):
    """A precision estimate is not positive definite, so its likelihood loss is undefined."""

    code: ClassVar[str] = "PDD014"

    split: int
    value: float

    def __str__(self) -> str:
        return f"Estimate for split {self.split} at tuning value {self.value!r} is indefinite"


@dataclass(frozen=True)
class FitFailed(PddcovError):
    """Exponential-sum fit exceeded its relative-error tolerance."""

    code: ClassVar[str] = "PDD015"

    max_rel_err: float
    tol: float

    def __str__(self) -> str:
        return (
            f"Exponential-sum fit max relative error {self.max_rel_err:.4g} exceeds "
            f"tolerance {self.tol:.4g}; raise n_terms"
        )


# ---------------------------------------------------------------------------
# Rates and diagnostics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OutOfRange(PddcovError):
    """A derived quantity falls outside its admissible range."""

    code: ClassVar[str] = "PDD020"

    name: str
    value: float
    upper: float

    def __str__(self) -> str:
        return f"{self.name}={self.value:.6g} exceeds its upper limit {self.upper:.6g}"


@dataclass(frozen=True)
class TooFewLags(PddcovError):
    """Not enough usable lags remain for a log-linear fit."""

    code: ClassVar[str] = "PDD021"

    usable: int
    minimum: int = 3

    def __str__(self) -> str:
        return f"Only {self.usable} usable lags, at least {self.minimum} required"


@dataclass(frozen=True)
class TooLarge(PddcovError):
    """Dimension exceeds the limit of a quartic-memory diagnostic."""

    code: ClassVar[str] = "PDD022"

    p: int
    limit: int

    def __str__(self) -> str:
        return f"p={self.p} exceeds the limit {self.limit} for this diagnostic"


@dataclass(frozen=True)
class SingularGammaSS(PddcovError):
    """The support block of R ⊗ R is not invertible."""

    code: ClassVar[str] = "PDD023"

    support_size: int

    def __str__(self) -> str:
        return f"Gamma restricted to the support ({self.support_size} entries) is singular"


@dataclass(frozen=True)
class TooSmall(PddcovError):
    """Sample too short for the requested cross-validation plan."""

    code: ClassVar[str] = "PDD024"

    n: int
    h1: int

    def __str__(self) -> str:
        return f"n={self.n} is too small for {self.h1} blocks (need n >= {4 * self.h1})"


# ---------------------------------------------------------------------------
# Configuration and harness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SchemaError(PddcovError):
    """Configuration file failed schema validation."""

    code: ClassVar[str] = "PDD030"

    key_path: str
    message: str

    def __str__(self) -> str:
        return f"Config error at {self.key_path or '<root>'}: {self.message}"


@dataclass(frozen=True)
class BenchAborted(PddcovError):
    """Too many replications failed for the benchmark to be meaningful."""

    code: ClassVar[str] = "PDD031"

    failures: int
    replications: int
    messages: tuple[str, ...] = ()

    def __str__(self) -> str:
        head = f"Benchmark aborted: {self.failures}/{self.replications} replications failed"
        if self.messages:
            return head + "; first failure: " + self.messages[0]
        return head


@dataclass(frozen=True)
class UnknownMethod(PddcovError):
    """No estimator is registered under ``name``."""

    code: ClassVar[str] = "PDD032"

    name: str
    available: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"Unknown method {self.name!r}; available: {', '.join(self.available) or 'none'}"


@dataclass(frozen=True)
class DuplicateMethod(PddcovError):
    """An estimator name is already taken."""

    code: ClassVar[str] = "PDD033"

    name: str

    def __str__(self) -> str:
        return f"Method {self.name!r} is already registered"
