"""Exception types shared across the package."""


class MbnfError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(MbnfError):
    """Raised on malformed input text; carries line/column of the offending token."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ContractError(MbnfError):
    """An operation was called with input outside its declared fragment."""


class OracleCapExceeded(MbnfError):
    """The brute-force oracle was asked for an alphabet larger than its cap."""
