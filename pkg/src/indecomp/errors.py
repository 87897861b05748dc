"""Exception hierarchy shared by the library and the CLI."""


class IndecompError(Exception):
    """Base class for every error raised by this package."""


class TournamentError(IndecompError, ValueError):
    """An arc list or matrix that does not describe a tournament."""


class ParseError(TournamentError):
    """Malformed serialized input; carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class CapacityError(IndecompError):
    """A size guard was exceeded (vertex count, permutation search, census order)."""


class PreconditionError(IndecompError, ValueError):
    """An operation was called outside its stated domain."""


class FalsificationError(IndecompError):
    """A statement that should hold for every instance failed on this one."""

    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}
