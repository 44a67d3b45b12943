from __future__ import annotations

from typing import Callable, Protocol, runtime_checkable

from .partition import Partition
from .types import State


@runtime_checkable
class Executable[T_co](Protocol):
    """Protocol for the command objects run by the CLI."""

    def execute(self) -> T_co:
        """Performs the command and returns its result."""
        ...


@runtime_checkable
class SignatureFunction[T](Protocol):
    """
    Fingerprint of a state's behaviour with respect to a partition.

    Two states of one block violate the bisimulation condition exactly when
    their fingerprints differ.
    """

    def __call__(self, state: State, partition: Partition) -> T: ...


def implements[T](_proto: object, /) -> Callable[[type[T]], type[T]]:
    """
    Marks a class as an implementation of a Protocol.
    No runtime effect; documentation only.
    """

    def decorator(cls: type[T]) -> type[T]:
        return cls

    return decorator
