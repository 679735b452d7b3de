"""Exception hierarchy shared by every module.

Each class maps onto one named failure mode; several also inherit from the
closest builtin so callers can catch ``ValueError`` / ``ZeroDivisionError``
generically.
"""

from __future__ import annotations


class EllPairsError(Exception):
    """Base class for all library errors."""


# -- fields -----------------------------------------------------------------
class NonPrimeCharacteristic(EllPairsError, ValueError):
    pass


class UnsupportedSize(EllPairsError, ValueError):
    pass


class NotInField(EllPairsError, ValueError):
    pass


class DivisionByZero(EllPairsError, ZeroDivisionError):
    pass


class FieldMismatch(EllPairsError, ValueError):
    pass


class InvalidExponentIndex(EllPairsError, ValueError):
    pass


# -- polynomials ------------------------------------------------------------
class DivisionByZeroPoly(DivisionByZero):
    pass


class BothZero(EllPairsError, ValueError):
    pass


class ZeroInput(EllPairsError, ValueError):
    pass


class DegreeZeroInput(EllPairsError, ValueError):
    pass


class NonPositiveDegree(EllPairsError, ValueError):
    pass


# -- matrices ---------------------------------------------------------------
class DimensionMismatch(EllPairsError, ValueError):
    pass


class NotAPermutation(EllPairsError, ValueError):
    pass


class ZeroWeight(EllPairsError, ValueError):
    pass


class RepeatedNode(EllPairsError, ValueError):
    pass


class SingularCell(EllPairsError, ValueError):
    pass


class NotDistinct(EllPairsError, ValueError):
    pass


class TooLargeForExhaustiveCheck(EllPairsError, ValueError):
    pass


class SingularMatrix(EllPairsError, ValueError):
    pass


# -- codes ------------------------------------------------------------------
class EmptyMatrix(EllPairsError, ValueError):
    pass


class LengthMismatch(EllPairsError, ValueError):
    pass


class ZeroCode(EllPairsError, ValueError):
    pass


class TooLargeToEnumerate(EllPairsError, ValueError):
    pass


class NotMonomial(EllPairsError, ValueError):
    pass


# -- pairs ------------------------------------------------------------------
class InvalidDims(EllPairsError, ValueError):
    pass


class NotFoundWithinBudget(EllPairsError):
    """Randomized search gave up; this is not a proof of nonexistence."""


class GammaOutOfRange(EllPairsError, ValueError):
    pass


class NotSuperRegular(EllPairsError, ValueError):
    pass


class IndexOutOfRange(EllPairsError, ValueError):
    pass


class SearchSpaceTooLarge(EllPairsError, ValueError):
    pass


# -- GRS --------------------------------------------------------------------
class RootAtEvaluationPoint(EllPairsError, ValueError):
    pass


class DegreeTooLarge(EllPairsError, ValueError):
    pass


class ParameterOutOfRange(EllPairsError, ValueError):
    pass


class DegreeConditionViolated(EllPairsError, ValueError):
    pass


class NoRootFreeFactor(DegreeConditionViolated):
    """A degree-one factor is required but every candidate root is an evaluation point."""


class TheoremPreconditionViolated(EllPairsError, ValueError):
    def __init__(self, failed: list[int], message: str = ""):
        self.failed = list(failed)
        super().__init__(message or f"theorem conditions {self.failed} not satisfied")


class LcmDegreeTooLarge(EllPairsError, ValueError):
    pass


# -- EAQECC -----------------------------------------------------------------
class DistanceTooExpensive(EllPairsError):
    pass


class CatalogMiss(EllPairsError, KeyError):
    pass


class CertificationError(EllPairsError):
    pass
