"""Exception hierarchy shared by the solvers, the parsers and the CLI."""


class FuzzyLabError(Exception):
    """Base class for every error raised by this package."""


class DomainError(FuzzyLabError, ValueError):
    """An argument violates an operation's precondition."""


class ResourceError(FuzzyLabError):
    """An enumeration would exceed the configured size bound."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class ParseError(FuzzyLabError, ValueError):
    """A text document could not be parsed."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
