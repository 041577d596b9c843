"""CLI package.

The ``cli`` sub-package contains the Click application, the ``dispatch``
entry point and the run-manifest writer.
"""
from __future__ import annotations

from pddcov.cli.main import cli, dispatch, main
from pddcov.cli.manifest import RunManifest

__all__ = ["RunManifest", "cli", "dispatch", "main"]
