# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Exceptions raised by crystalline.

Every exception derives from :class:`CrystallineError` and from the builtin
exception closest to its meaning, so ``except ValueError`` keeps working for
callers that do not know about the hierarchy.
"""


class CrystallineError(Exception):
    """Base class of all errors raised by crystalline."""


class ParamMismatch(CrystallineError, ValueError):
    """Operands live over different (p, d) or at different precisions."""


class NonUnit(CrystallineError, ArithmeticError):
    """An element or matrix that has to be invertible is not."""


class PrecisionIncrease(CrystallineError, ValueError):
    """Truncation was asked to increase the precision."""


class PrecisionOverflow(CrystallineError, OverflowError):
    """p^m exceeds the configured modulus cap."""


class InsufficientPrecision(CrystallineError):
    """A result is not determined at the available p-adic precision."""


class NotACrystal(InsufficientPrecision):
    """
    The determinant of a semilinear matrix vanishes modulo p^m.

    At finite precision this means nondegeneracy is undetermined, which is why
    this is a special case of :class:`InsufficientPrecision`.
    """


class InvalidSlope(CrystallineError, ValueError):
    """A slope a/b is not in lowest terms or out of range."""


class IndexOutOfRange(CrystallineError, IndexError):
    """An exterior power index is outside [0, rank]."""


class NotASubfield(CrystallineError, ValueError):
    """The requested base change is not along a field extension."""


class RankMismatch(CrystallineError, ValueError):
    """Two polygons of different rank were compared."""


class CapExceeded(CrystallineError):
    """A configured resource cap would be exceeded."""


class NotStabilized(CrystallineError):
    """A brute-force count still grows at the largest extension tried."""


class DescriptionError(CrystallineError, ValueError):
    """
    An input description could not be parsed or is inconsistent.

    :param message: What went wrong.
    :type message: str
    :param line: Line of the offending token, if known.
    :type line: int | None
    :param column: Column of the offending token, if known.
    :type column: int | None
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        #: Line of the offending token (1-based).
        self.line = line
        #: Column of the offending token (1-based).
        self.column = column
