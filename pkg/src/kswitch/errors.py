"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class KSwitchError(Exception):
    """Base class for every error raised by this package."""


class InputError(KSwitchError, ValueError):
    """Malformed or inconsistent input (bad vertex ids, dimension mismatch, ...)."""


class CapacityError(KSwitchError):
    """A computation would exceed a configured size, dimension or budget cap.

    ``lower`` and ``upper`` carry the bracketing bounds known when the cap
    was hit, if any.
    """

    def __init__(self, message: str, *, lower: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class ValidationError(InputError):
    """A switching assignment is not a valid k-switching for the graph."""

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class NoEdgesError(InputError):
    """The operation needs at least one edge."""


class FormatError(InputError):
    """Base class for text-format parse errors; carries a 1-based position."""

    kind = "format"

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MalformedLineError(FormatError):
    kind = "malformed"


class VertexRangeError(FormatError):
    kind = "vertex-range"


class DuplicateEdgeError(FormatError):
    kind = "duplicate-edge"


class LoopError(FormatError):
    kind = "loop"
