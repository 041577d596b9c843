"""Loading and validating JSON run configurations."""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from pddcov.config.models import BenchConfig, EstimateConfig
from pddcov.core.errors import SchemaError

logger = logging.getLogger(__name__)

SEED_ENV = "PDDCOV_SEED"


def _schema_error(exc: ValidationError) -> SchemaError:
    first = exc.errors()[0]
    key_path = ".".join(str(part) for part in first.get("loc", ()))
    return SchemaError(key_path=key_path, message=first.get("msg", "invalid value"))


def parse_config(data: Any) -> BenchConfig | EstimateConfig:
    """Validate an already-decoded JSON document.

    The estimate schema is chosen when the document has a ``method`` key,
    the benchmark schema otherwise.  ``PDDCOV_SEED`` overrides ``seed``.

    Raises
    ------
    SchemaError
        With the dotted key path of the first offending field.
    """
    if not isinstance(data, dict):
        raise SchemaError(key_path="", message="configuration must be a JSON object")
    document = dict(data)
    override = os.environ.get(SEED_ENV)
    if override is not None:
        try:
            document["seed"] = int(override)
        except ValueError:
            raise SchemaError(key_path="seed", message=f"{SEED_ENV} must be an integer") from None
        logger.info("seed overridden by %s=%s", SEED_ENV, override)
    schema = EstimateConfig if "method" in document else BenchConfig
    try:
        return schema.model_validate(document)
    except ValidationError as exc:
        raise _schema_error(exc) from None


def load_config(path: str | Path) -> BenchConfig | EstimateConfig:
    """Read and validate the JSON configuration at ``path``.

    Example
    -------
    ::

        cfg = load_config("bench.json")   # {"model": 1, "p": 50, "n": 200, "alpha": 0.5}
        cfg.replications                  # 20
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(key_path="", message=f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        message = f"invalid JSON: {exc.msg} at line {exc.lineno}"
        raise SchemaError(key_path="", message=message) from None
    return parse_config(data)
