"""Exception types shared across the toolkit."""


class VasskitError(Exception):
    """Base class for all toolkit errors."""


class ParseError(VasskitError):
    """Syntax or semantic error in an instance or certificate file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(VasskitError):
    """An operation was called outside its stated precondition.

    ``point`` carries the offending visited point for margin/corridor
    violations, when one exists.
    """

    def __init__(self, message: str, point=None):
        self.point = point
        if point is not None:
            message = f"{message} (offending point {point})"
        super().__init__(message)


class BudgetExceededError(VasskitError):
    """A search exhausted its resource budget without an answer.

    Distinct from an unreachable verdict: nothing was decided.
    """


class CapacityError(VasskitError):
    """Exact arithmetic exceeded the implementation's representable range.

    Python integers are unbounded, so this is raised only on conversion to
    fixed-width external formats, never silently wrapped.
    """


class InternalDefectError(VasskitError):
    """A situation the construction guarantees impossible was reached; a bug."""
