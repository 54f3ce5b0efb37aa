"""Exception hierarchy shared across the package.

``SemitransError`` is the common base so the command-line front end can map
library failures onto its exit-code contract without enumerating modules.
"""

from __future__ import annotations


class SemitransError(Exception):
    """Base class for all errors raised by this package."""


class BadParameters(SemitransError):
    """A generator or operation was called with out-of-contract parameters."""


class JumpOutOfRange(BadParameters):
    """A circulant jump is outside [1, n/2]."""


class OffsetOutOfRange(BadParameters):
    """A Toeplitz offset is outside [1, n-1]."""


class MissingEdge(SemitransError):
    """An edge required by the operation is not present in the graph."""


class NotAnEdge(SemitransError):
    """An arc refers to a vertex pair that is not an edge of the graph."""


class UncoveredEdge(SemitransError):
    """An orientation left at least one edge of the graph unassigned."""


class DoubleAssignment(SemitransError):
    """The same edge was given a direction more than once."""


class NotAcyclic(SemitransError):
    """The operation requires an acyclic orientation but got a cyclic one."""


class ImproperColoring(SemitransError):
    """A coloring assigns equal colors to the endpoints of some edge."""


class BoundExceeded(SemitransError):
    """The instance is larger than the operation's configured size cap."""


class TooLarge(SemitransError):
    """The instance is too large for exhaustive enumeration."""


class FormatError(SemitransError):
    """A text document (edge list, orientation, certificate) is malformed."""


class ParseError(SemitransError):
    """A proof script is syntactically invalid.

    Carries the 1-based source line and column of the offending token.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class StepRejected(SemitransError):
    """A proof-script step does not apply to the state it was replayed on."""
