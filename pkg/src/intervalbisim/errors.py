"""Exceptions raised by the library."""

from __future__ import annotations


class IntervalBisimError(Exception):
    """Base class of every error raised by intervalbisim."""


class ParseError(IntervalBisimError, ValueError):
    """Malformed model or formula text."""

    line: int
    column: int
    message: str

    def __init__(self, line: int, column: int, message: str) -> None:
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"{line}:{column}: {message}")


class InvalidInterval(IntervalBisimError, ValueError):
    """An interval outside ``0 <= lo <= hi <= 1``."""


class SyncUncertainty(IntervalBisimError, ValueError):
    """A synchronised action carries a non-point interval."""

    def __init__(self, component: int, state: str, action: str) -> None:
        self.component = component
        self.state = state
        self.action = action
        super().__init__(
            f"component {component}: action {action!r} in state {state!r} "
            "is synchronised but has a non-point interval"
        )


class DisabledAction(IntervalBisimError, ValueError):
    def __init__(self, state: str, action: str) -> None:
        self.state = state
        self.action = action
        super().__init__(f"action {action!r} is not enabled in state {state!r}")


class EmptyPolytope(IntervalBisimError, ValueError):
    """The interval bounds admit no distribution."""


class BlockMismatch(IntervalBisimError, ValueError):
    """Two geometric objects are expressed over different block lists."""


class NotLabelUniform(IntervalBisimError, ValueError):
    """A partition block mixes states with different labels."""


class OracleBoundExceeded(IntervalBisimError, RuntimeError):
    """An oracle was asked to enumerate more than its configured bound."""


class UnboundedUntil(IntervalBisimError, ValueError):
    """Unbounded until cannot be evaluated by finite-horizon iteration."""


class InvariantBreach(IntervalBisimError, RuntimeError):
    """An internal invariant of an algorithm did not hold."""


class InvalidModel(IntervalBisimError, ValueError):
    """A parsed model failed validation."""

    def __init__(self, report: str) -> None:
        self.report = report
        super().__init__(f"invalid model:\n{report.rstrip()}")
