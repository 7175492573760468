"""Shared exception types."""


class GraphInputError(ValueError):
    """Malformed or out-of-contract input (bad vertex ids, bad files, ...)."""


class EdgeListParseError(GraphInputError):
    """Edge-list text rejected; carries the offending 1-based line number."""

    def __init__(self, line_number, message):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class PreconditionError(GraphInputError):
    """An operation's stated precondition does not hold for the input."""


class ResourceLimitError(RuntimeError):
    """Refusing to run an exponential routine past its size guard."""
