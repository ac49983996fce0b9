"""Exception hierarchy for exact-algebra failures.

Every mathematically meaningful failure raises a subclass of AlgebraError so
the command line tool can distinguish "the input is bad algebra" (exit 1)
from "the input is not even parseable" (exit 2).
"""


class AlgebraError(Exception):
    """Base class for all domain errors raised by this package."""


class DescriptorMismatch(AlgebraError):
    """Operands belong to different base fields or extensions."""


class UnsupportedBaseField(AlgebraError):
    """The operation is only available on one of the two base-field tiers."""


class NonzeroRequired(AlgebraError):
    """A divisor, gcd argument, or basis entry was unexpectedly zero."""


class FactorBoundExceeded(AlgebraError):
    """Refused to factor an element whose norm exceeds the configured bound."""


class NotInvertible(AlgebraError):
    """Exact division failed; the divisor does not divide the dividend."""


class DiscriminantNotFundamental(AlgebraError):
    """The configured discriminant is a square, not a quadratic residue
    modulo 4, or has a forbidden square divisor."""


class DiscriminantMismatch(AlgebraError):
    """The object's discriminant is not a totally-positive-unit-square
    multiple of the configured extension discriminant."""


class NotPrimitive(AlgebraError):
    """The form's coefficient gcd is not a unit."""


class NotAnIdeal(AlgebraError):
    """The module spanned by the given basis is not closed under
    multiplication by the ring of integers of the extension."""


class DegenerateBasis(AlgebraError):
    """The two generators are linearly dependent over the base field."""


class NotUnimodular(AlgebraError):
    """A transformation matrix does not have totally positive unit
    determinant, or the scalar factor is not a unit."""


class NotProjective(AlgebraError):
    """Some attached form of the cube is imprimitive."""


class NotBalanced(AlgebraError):
    """The ideal triple fails the balancing conditions."""


class NonIntegralEntry(AlgebraError):
    """A computed matrix or cube entry left the ring of integers."""


class GeneratorUnavailable(AlgebraError):
    """No generator of a principal ideal could be produced."""


class ProductNotUnitIdeal(AlgebraError):
    """The module product of the triple is not the full ring of integers."""


class DetProductNotTotallyPositiveUnit(AlgebraError):
    """The product of basis determinants is not a totally positive unit."""


class WitnessMismatch(AlgebraError):
    """A supplied certificate does not check out against the object."""


class ScaleNotAllowed(AlgebraError):
    """Rescaling the triple by these factors would break balance."""
