"""Exception types shared across the package."""
from __future__ import annotations

from typing import Optional


class OrigamiError(Exception):
    """Base class for errors raised by this package."""


class ParseError(OrigamiError, ValueError):
    """Malformed text input; carries the 0-based column of the problem."""

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.message = message
        self.text = text
        self.position = position
        if position is None:
            super().__init__(message)
        else:
            super().__init__(f"{message} at column {position + 1}: {text!r}")

    def annotated(self) -> str:
        if self.position is None:
            return self.message
        return f"{self.message}\n  {self.text}\n  {' ' * self.position}^"


class DegreeMismatch(OrigamiError, ValueError):
    pass


class NotNeighbors(OrigamiError, ValueError):
    """Two slopes that are not Farey neighbors were given where a pair is required."""


class DisconnectedSurface(OrigamiError):
    """The operation needs <sigma, tau> to act transitively."""


class BoundExceeded(OrigamiError):
    """An exhaustive search was asked for beyond the configured degree bound."""


class HypothesisError(OrigamiError, ValueError):
    """A precondition of a combinatorial statement does not hold."""


class InvariantBreach(OrigamiError, AssertionError):
    """Two independent computations disagree. Signals a bug, not bad input."""
