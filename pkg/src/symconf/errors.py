"""Exception hierarchy shared by all symconf modules.

Every domain error derives from :class:`SymconfError` so callers (and the
CLI) can catch one base class.  Class names double as the stable error
names printed on the command line (``error: <Name>: <detail>``).
"""

from __future__ import annotations

__all__ = [
    "SymconfError",
    # finite fields
    "NotPrime",
    "DegreeOutOfRange",
    "FieldMismatch",
    "ZeroInverse",
    "ZeroArgument",
    # rulers
    "MarksExceedModulus",
    "NotGolomb",
    "GcdNotOne",
    "NotModularGolomb",
    "DeltaTooLarge",
    # constructions
    "NotPrimePower",
    "FieldTooLarge",
    "NotPrimitiveRoot",
    # incidence matrices
    "RowWeightNotConstant",
    "ColumnWeightNotConstant",
    "TwoByTwoAllOnes",
    # block double-circulant forms
    "NotDivisor",
    "DeltaExceedsWeight",
    "IndexOutOfRange",
    "OddBlockCount",
    "ConstraintViolated",
    # extensions
    "InvalidAggregate",
    "ExtensionUnavailable",
    # catalog
    "UnknownK",
    "UnknownFamily",
    "ParseError",
    "MonotonicityViolation",
]


class SymconfError(Exception):
    """Base class for all domain errors raised by this package."""


class NotPrime(SymconfError):
    pass


class DegreeOutOfRange(SymconfError):
    pass


class FieldMismatch(SymconfError):
    pass


class ZeroInverse(SymconfError):
    pass


class ZeroArgument(SymconfError):
    pass


class MarksExceedModulus(SymconfError):
    pass


class NotGolomb(SymconfError):
    pass


class GcdNotOne(SymconfError):
    pass


class NotModularGolomb(SymconfError):
    pass


class DeltaTooLarge(SymconfError):
    pass


class NotPrimePower(SymconfError):
    pass


class FieldTooLarge(SymconfError):
    pass


class NotPrimitiveRoot(SymconfError):
    pass


class RowWeightNotConstant(SymconfError):
    def __init__(self, row: int, weight: int, expected: int):
        super().__init__(f"row {row} has weight {weight}, expected {expected}")
        self.row = row
        self.weight = weight
        self.expected = expected


class ColumnWeightNotConstant(SymconfError):
    def __init__(self, column: int, weight: int, expected: int):
        super().__init__(f"column {column} has weight {weight}, expected {expected}")
        self.column = column
        self.weight = weight
        self.expected = expected


class TwoByTwoAllOnes(SymconfError):
    def __init__(self, row_a: int, row_b: int):
        super().__init__(f"rows {row_a} and {row_b} share two or more common ones")
        self.rows = (row_a, row_b)


class NotDivisor(SymconfError):
    pass


class DeltaExceedsWeight(SymconfError):
    pass


class IndexOutOfRange(SymconfError):
    pass


class OddBlockCount(SymconfError):
    pass


class ConstraintViolated(SymconfError):
    pass


class InvalidAggregate(SymconfError):
    pass


class ExtensionUnavailable(SymconfError):
    def __init__(self, step: int, message: str = ""):
        detail = message or f"no disjoint extending aggregate found at step {step}"
        super().__init__(detail)
        self.step = step


class UnknownK(SymconfError):
    pass


class UnknownFamily(SymconfError):
    pass


class ParseError(SymconfError):
    pass


class MonotonicityViolation(SymconfError):
    pass
