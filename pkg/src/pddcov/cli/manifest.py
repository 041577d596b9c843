"""Run manifests written next to every CLI output file.

A manifest records the command, the fully resolved configuration, the
seed, the tool version and SHA-256 digests of every input and output file.
Its own digest leaves out the timestamps, so re-running a manifest's
configuration reproduces the same digest exactly when the outputs match.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field, replace
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

MANIFEST_SUFFIX = ".manifest.json"
SIDECAR_SUFFIX = ".json"


def file_digest(path: str | Path) -> str:
    """``sha256:<hex>`` of a file's bytes."""
    digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
    return f"sha256:{digest}"


def utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def manifest_path(out: str | Path) -> Path:
    return Path(f"{out}{MANIFEST_SUFFIX}")


def sidecar_path(out: str | Path) -> Path:
    return Path(f"{out}{SIDECAR_SUFFIX}")


@dataclass(frozen=True)
class RunManifest:
    """Provenance of one CLI invocation."""

    command: str
    config: dict[str, Any]
    seed: int | None
    version: str
    input_digests: dict[str, str] = field(default_factory=dict)
    output_digests: dict[str, str] = field(default_factory=dict)
    started: str = ""
    finished: str = ""

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def digest(self) -> str:
        payload = {k: v for k, v in self.to_dict().items() if k not in ("started", "finished")}
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"), default=str)
        return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def write_json(data: dict[str, Any], path: str | Path) -> None:
    Path(path).write_text(json.dumps(data, indent=2, default=str) + "\n", encoding="utf-8")


def finalize_outputs(
    manifest: RunManifest,
    out: str | Path,
    sidecar: dict[str, Any] | None = None,
) -> RunManifest:
    """Record ``out``'s digest, write the manifest and the sidecar.

    The sidecar (``<out>.json``) carries ``manifest_digest``; the manifest
    is written to ``<out>.manifest.json``.
    """
    outputs = {**manifest.output_digests, str(out): file_digest(out)}
    done = replace(manifest, output_digests=outputs, finished=utc_now())
    record = {**done.to_dict(), "digest": done.digest()}
    write_json(record, manifest_path(out))
    if sidecar is not None:
        write_json({**sidecar, "manifest_digest": done.digest()}, sidecar_path(out))
    return done
