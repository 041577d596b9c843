"""Name-keyed registry of estimator classes.

Built-in estimators register with the ``register`` decorator at import
time.  Third-party packages can add their own by declaring entry-points in
the ``pddcov.estimators`` group::

    [project.entry-points."pddcov.estimators"]
    banded = "my_package.banding:BandedEstimator"

and calling ``registry.load_entrypoints()`` (the CLI does this on start-up).
"""
from __future__ import annotations

import importlib.metadata
import logging
from collections.abc import Callable
from typing import Generic, TypeVar

from pddcov.core.errors import DuplicateMethod, UnknownMethod

logger = logging.getLogger(__name__)

T = TypeVar("T")

ENTRYPOINT_GROUP = "pddcov.estimators"


class EstimatorRegistry(Generic[T]):
    """Type-checked mapping from method name to estimator class.

    Parameters
    ----------
    base_class:
        The abstract base every registered class must subclass.
    """

    def __init__(self, base_class: type[T]) -> None:
        self._base_class = base_class
        self._classes: dict[str, type[T]] = {}

    # ------------------------------------------------------------------
    # Registration
    # ------------------------------------------------------------------

    def register(self, name: str) -> Callable[[type[T]], type[T]]:
        """Class decorator registering the class under ``name``.

        Raises
        ------
        DuplicateMethod
            If ``name`` is taken.
        TypeError
            If the class does not subclass the base class.
        """

        def decorator(cls: type[T]) -> type[T]:
            self.register_class(name, cls)
            return cls

        return decorator

    def register_class(self, name: str, cls: type[T]) -> None:
        if name in self._classes:
            raise DuplicateMethod(name)
        if not (isinstance(cls, type) and issubclass(cls, self._base_class)):
            raise TypeError(
                f"Cannot register {cls!r} under {name!r}: "
                f"it must subclass {self._base_class.__name__}."
            )
        self._classes[name] = cls
        logger.debug("Registered estimator %r -> %s", name, cls.__qualname__)

    def deregister(self, name: str) -> None:
        if name not in self._classes:
            raise UnknownMethod(name, tuple(self.names()))
        del self._classes[name]
        logger.debug("Deregistered estimator %r", name)

    # ------------------------------------------------------------------
    # Lookup
    # ------------------------------------------------------------------

    def get(self, name: str) -> type[T]:
        try:
            return self._classes[name]
        except KeyError:
            raise UnknownMethod(name, tuple(self.names())) from None

    def names(self) -> list[str]:
        return sorted(self._classes)

    def __contains__(self, name: object) -> bool:
        return name in self._classes

    def __len__(self) -> int:
        return len(self._classes)

    def __repr__(self) -> str:
        return f"EstimatorRegistry(base_class={self._base_class.__name__}, methods={self.names()})"

    # ------------------------------------------------------------------
    # Entry-point loading
    # ------------------------------------------------------------------

    def load_entrypoints(self, group: str = ENTRYPOINT_GROUP) -> None:
        """Register every installed entry-point in ``group``; repeat calls are no-ops."""
        for ep in importlib.metadata.entry_points(group=group):
            if ep.name in self._classes:
                logger.debug("Entry-point %r already registered; skipping.", ep.name)
                continue
            try:
                cls = ep.load()
            except Exception:
                logger.exception(
                    "Failed to load entry-point %r from group %r; skipping.", ep.name, group
                )
                continue
            try:
                self.register_class(ep.name, cls)
            except (DuplicateMethod, TypeError):
                logger.warning(
                    "Entry-point %r loaded but could not be registered; skipping.", ep.name
                )
