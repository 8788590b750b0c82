"""Exception hierarchy.

Every domain error raised by the library derives from :class:`AddactError`;
the CLI maps these to exit status 1 and reports the class name.
"""


class AddactError(Exception):
    pass


# exactpoly
class PolySyntaxError(AddactError, ValueError):
    pass


class UnknownVariable(AddactError, ValueError):
    pass


class NegativeExponent(AddactError, ValueError):
    pass


class VariableMismatch(AddactError, ValueError):
    pass


class IndexOutOfRange(AddactError, IndexError):
    pass


# artin
class NonzeroConstantTerm(AddactError, ValueError):
    pass


class TruncationCapExceeded(AddactError):
    """The truncated quotient dimensions never stabilized below the cap.

    This happens when the relation ideal is not primary to the maximal ideal
    at the origin, so the quotient is not a finite-dimensional local algebra.
    """


class DimensionMismatch(AddactError, ValueError):
    pass


class NotInMaximalIdeal(AddactError, ValueError):
    pass


class NotAnIdeal(AddactError, ValueError):
    pass


class QuotientIsZero(AddactError, ValueError):
    pass


class NotNilpotent(AddactError, ValueError):
    pass


class UnitPartNotOne(AddactError, ValueError):
    pass


# hpair
class WrongCodimension(AddactError, ValueError):
    pass


class DoesNotGenerate(AddactError, ValueError):
    pass


class ComplementInU(AddactError, ValueError):
    pass


class IdealNotInsideU(AddactError, ValueError):
    pass


class InternalInvariantViolation(AddactError, AssertionError):
    pass


# construct
class ZeroIdeal(AddactError, ValueError):
    pass


class NondegenerateInput(AddactError, ValueError):
    pass


class ShrinkPassLimit(AddactError):
    pass


# families
class InvalidRange(AddactError, ValueError):
    pass


# file format
class FormatError(AddactError, ValueError):
    pass


# geometry
class ZeroPolynomial(AddactError, ValueError):
    pass


class InvalidOrder(AddactError, ValueError):
    pass
