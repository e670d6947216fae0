"""Exception types shared across the library.

Validators report problems as data (lists of :class:`~quiveralg.quiver.Problem`);
exceptions are reserved for misuse of an API, malformed input files, and
internal consistency failures that indicate a bug rather than bad data.
"""


class QuiverAlgError(Exception):
    """Base class for all library errors."""


class CompositionError(QuiverAlgError):
    """Raised when composing paths whose endpoints do not match."""


class RotationError(QuiverAlgError):
    """Raised when rotating a path that is not a nontrivial cycle."""


class ParseError(QuiverAlgError):
    """Raised on malformed input text; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class ValidationError(QuiverAlgError):
    """Raised by the raising variants of the validators.

    The ``problems`` attribute holds the individual findings.
    """

    def __init__(self, problems):
        self.problems = tuple(problems)
        super().__init__("; ".join(f"[{p.code}] {p.message}" for p in self.problems))


class MultiplicityError(QuiverAlgError):
    """Raised when an operation requires multiplicity one everywhere."""


class CuttingSetError(QuiverAlgError):
    """Raised for arrow sets that do not cut every vertex cycle exactly once."""


class InconsistencyError(QuiverAlgError):
    """Internal structural guarantee failed; indicates corrupt input or a bug."""
