"""Exception types shared across the package."""

from __future__ import annotations


class Tangle3Error(Exception):
    """Base class for all package-specific errors."""


class ParseError(Tangle3Error):
    """A tangle file is malformed.  Carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnrealizableCoordinates(Tangle3Error):
    """Coordinate data does not describe any arc system."""


class TraceCoordinateMismatch(Tangle3Error):
    """A file's trace block disagrees with its coordinate lines."""


class NotAViolation(Tangle3Error):
    """A replacement was requested at a window pair that is not adjacent
    same-arc."""


class InvalidAttachment(Tangle3Error):
    """A jump move attachment site does not meet the doubled arc."""


class NotNormalForm(Tangle3Error):
    """An operation requiring a normal form was given something else."""


class NotCase2(Tangle3Error):
    """An operation requiring every window to be crossed was given a system
    with a silent disk."""


class ExtractionError(Tangle3Error):
    """Internal: coordinate extraction failed to match any candidate.

    Public entry points catch this and fall back to the geometric search;
    seeing it escape means a bug, not bad input.
    """
