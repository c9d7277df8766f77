"""Exception hierarchy shared by every module of the package."""
from __future__ import annotations


class ReconfigError(Exception):
    """Base class for all errors raised by spreconf."""


class InstanceFormatError(ReconfigError, ValueError):
    """Malformed instance, path or cost file."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnreachableTarget(ReconfigError, ValueError):
    pass


class DisconnectedPair(ReconfigError, ValueError):
    pass


class CapExceeded(ReconfigError):
    """More shortest paths (or a longer s-t distance) than the caller allowed."""

    def __init__(self, cap: int, count: int | None = None, what: str = "shortest paths") -> None:
        self.cap = cap
        self.count = count
        detail = f" ({count})" if count is not None else ""
        super().__init__(f"number of {what}{detail} exceeds cap {cap}")


class InvalidPath(ReconfigError, ValueError):
    pass


class NotShortestPath(InvalidPath):
    pass


class PreconditionViolated(ReconfigError, ValueError):
    pass


class EdgeNotOnShortestPath(ReconfigError, ValueError):
    pass


class InvalidRepresentation(ReconfigError, ValueError):
    pass


class OrientationConflict(ReconfigError):
    """A chord received two orientations; the diagram is not a valid circle instance."""


class TriangleConditionViolated(ReconfigError):
    pass


class DomainMismatch(ReconfigError, ValueError):
    pass


class EmptyGraph(ReconfigError, ValueError):
    pass
