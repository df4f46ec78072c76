""" All the custom exceptions types
"""


class PyqscError(Exception):
    pass


# Fields


class NonPrime(PyqscError):
    pass


class NotPrimePower(NonPrime):
    pass


class FieldMismatch(PyqscError, TypeError):
    pass


class DivisionByZero(PyqscError, ZeroDivisionError):
    pass


class NoSuchRoot(PyqscError):
    pass


# Polynomials


class BothZero(PyqscError):
    pass


class ZeroConstantTerm(PyqscError):
    pass


class NotADivisor(PyqscError):
    pass


class PolyParseError(PyqscError):
    pass


# Cyclotomy


class BadModulus(PyqscError):
    pass


class NotPrimitive(PyqscError):
    pass


class NotCoprime(PyqscError):
    pass


class QNotSexticResidue(PyqscError):
    pass


# Codes


class CoefficientNotInBaseField(PyqscError):
    pass


class TooLarge(PyqscError):
    pass


class LengthMismatch(PyqscError):
    pass


class NotAFactor(PyqscError):
    pass


class EmptyGenerator(PyqscError):
    pass


class NoCodewordInBall(PyqscError):
    pass


# Synchronizable codes


class NotNested(PyqscError):
    pass


class NotDualContaining(PyqscError):
    pass


class DimensionOrder(PyqscError):
    pass


class ToleranceExceeded(PyqscError):
    pass


class FamilyPreconditionFailed(PyqscError):
    pass


class DegreeTooHigh(PyqscError):
    pass


class NotInOuterCode(PyqscError):
    pass


class NoMatchingShift(PyqscError):
    pass


# Reports


class ReportError(PyqscError):
    pass
