"""Exception hierarchy shared by all modules.

Domain errors (bad shapes, bad fillings, values out of range) derive from
DomainError; input-text problems derive from ParseError.  The CLI maps
DomainError to exit status 1 and ParseError to exit status 2.
"""


class DomainError(Exception):
    """Base class for all errors raised by tableau operations."""


class ShapeMismatch(DomainError):
    pass


class RowOrderViolation(DomainError):
    pass


class ColumnOrderViolation(DomainError):
    pass


class OrderViolation(DomainError):
    pass


class OffsetTooSmall(DomainError):
    pass


class UnderflowBelowOne(DomainError):
    pass


class SkewInputNotSupported(DomainError):
    pass


class NotATableau(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class NotSquare(DomainError):
    pass


class NegativeEntry(DomainError):
    pass


class NotLittlewoodRichardson(DomainError):
    pass


class NotInImage(DomainError):
    pass


class MapMismatch(DomainError):
    pass


class Unreachable(DomainError):
    pass


class ParseError(Exception):
    """Malformed input text; carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
