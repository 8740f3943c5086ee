"""Exception hierarchy shared by every clutterlab module."""

from __future__ import annotations


class ClutterError(ValueError):
    """Base class for invalid input to a clutterlab operation."""


class NonAntichain(ClutterError):
    pass


class UnknownVertex(ClutterError):
    pass


class DuplicateEdge(ClutterError):
    pass


class EmptyEdge(ClutterError):
    pass


class EmptySet(ClutterError):
    pass


class IsolatedVertex(ClutterError):
    pass


class NoEdges(ClutterError):
    pass


class NotAnEdge(ClutterError):
    pass


class ImproperClutter(ClutterError):
    """Raised when the unit-ideal clutter reaches an invariant computation."""


class ImproperColon(ClutterError):
    pass


class BadSpec(ClutterError):
    pass


class BadK(ClutterError):
    pass


class NotUniform(ClutterError):
    pass


class ResourceGuard(ClutterError):
    """An input exceeds a documented size guard."""


class TooLarge(ResourceGuard):
    pass


class TooManyEdges(ResourceGuard):
    pass


class InvariantViolation(AssertionError):
    """A proven inequality failed on a concrete input.

    ``details`` carries a JSON-serializable dump of the counterexample.
    """

    def __init__(self, message: str, details: dict | None = None) -> None:
        super().__init__(message)
        self.details = details or {}
