"""Exception hierarchy.

Every error raised on purpose by the library derives from ``VirtmodError``.
``DomainError`` covers mathematical refusals (the CLI maps them to exit
code 2); ``ParseError`` covers malformed input (exit code 1).
"""


class VirtmodError(Exception):
    pass


class DomainError(VirtmodError):
    pass


class ParseError(VirtmodError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(f"{message}{where}")


class RingMismatch(DomainError):
    pass


class ZeroElement(DomainError):
    pass


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class BothZero(DomainError):
    pass


class ZeroOrUnit(DomainError):
    pass


class UnsupportedRing(DomainError):
    pass


class FactorizationTooHard(DomainError):
    pass


class ShapeMismatch(DomainError):
    pass


class UnitIdeal(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class BoundExceeded(DomainError):
    pass


class UnknownPredicate(DomainError):
    pass


class NotDecomposable(DomainError):
    """Raised for a module that is not virtually semisimple.

    ``prime`` and ``factor`` witness the failure: ``prime**2`` divides the
    invariant factor ``factor``.
    """

    def __init__(self, message, prime=None, factor=None):
        super().__init__(message)
        self.prime = prime
        self.factor = factor


class NotVirtuallySimpleEntry(DomainError):
    def __init__(self, message, side, index):
        super().__init__(message)
        self.side = side
        self.index = index


class NotSubisomorphic(DomainError):
    """``direction`` is ``"a->b"`` or ``"b->a"``: the embedding that fails."""

    def __init__(self, message, direction):
        super().__init__(message)
        self.direction = direction


class InvalidDescriptor(DomainError):
    """A structure descriptor whose invariant factors are not a canonical chain."""


class CertificateError(VirtmodError):
    """An internal invariant was breached while building a certificate."""
