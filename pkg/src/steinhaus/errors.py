"""Exception types shared by the package."""

from __future__ import annotations


class SteinhausError(Exception):
    """Base class for all errors raised by this package."""


class Singular(SteinhausError, ArithmeticError):
    """Matrix (or one of its diagonal blocks) is not invertible over GF(2)."""


class ShapeMismatch(SteinhausError, ValueError):
    pass


class NotBlockTriangular(SteinhausError, ValueError):
    """A nonzero entry sits above the block diagonal."""


class NegativeUpper(SteinhausError, ValueError):
    pass


class NonIntegerQuotient(SteinhausError, ArithmeticError):
    """The Vandermonde quotient left a remainder. Always a bug."""


class OutOfTriangle(SteinhausError, IndexError):
    pass


class SizeMismatch(SteinhausError, ValueError):
    pass


class WrongCardinality(SteinhausError, ValueError):
    pass


class NotGenerating(SteinhausError, ValueError):
    pass


class LengthMismatch(SteinhausError, ValueError):
    pass


class TooLarge(SteinhausError, ValueError):
    pass


class TooMany(SteinhausError, ValueError):
    pass


class MixedSizes(SteinhausError, ValueError):
    pass


class StructureViolation(SteinhausError, AssertionError):
    """Block structure of the Delahan matrix is broken at ``position``."""

    def __init__(self, message: str, position: tuple[int, int] | None = None):
        super().__init__(message)
        self.position = position


class VertexOutOfRange(SteinhausError, IndexError):
    pass


class NotTriangularOrder(SteinhausError, ValueError):
    pass


class InternalMismatch(SteinhausError, AssertionError):
    """Two independent computation routes disagreed."""


class ParseError(SteinhausError, ValueError):
    pass
