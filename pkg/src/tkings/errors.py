"""Exception hierarchy shared across the package."""


class KingsError(Exception):
    """Base class for all errors raised by tkings."""


class InvalidQueryError(KingsError, ValueError):
    """A query asked about a vertex paired with itself, or an out-of-range id."""


class InvalidSizeError(KingsError, ValueError):
    pass


class UnsupportedSizeError(KingsError, ValueError):
    """No all-kings tournament exists on the requested number of vertices."""


class InvalidKError(KingsError, ValueError):
    pass


class InvalidInstanceError(KingsError, ValueError):
    pass


class ConfigError(KingsError, ValueError):
    pass


class EmptyInputError(KingsError, ValueError):
    pass


class ParseError(KingsError, ValueError):
    """Malformed text input. ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class HeaderError(ParseError):
    pass


class RowLengthError(ParseError):
    pass


class DiagonalError(ParseError):
    pass


class SymmetryError(ParseError):
    pass


class DegreeConditionError(InvalidInstanceError, ParseError):
    """A tripartite vertex lacks a neighbour in one of its two adjacent parts."""

    def __init__(self, message, vertex=None, line=None):
        self.vertex = vertex
        ParseError.__init__(self, message, line=line)
