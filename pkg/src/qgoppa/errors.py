"""Exception and warning types shared across the library."""


class QGoppaError(Exception):
    """Base class for all library errors."""


# -- field construction and arithmetic ---------------------------------------

class NotPrime(QGoppaError):
    pass


class EvenCharacteristic(QGoppaError):
    pass


class ReducibleModulus(QGoppaError):
    pass


class DegreeMismatch(QGoppaError):
    pass


class ZeroInput(QGoppaError):
    pass


class NonResidue(QGoppaError):
    pass


class FieldTooLarge(QGoppaError):
    pass


class SearchBoundExceeded(QGoppaError):
    pass


# -- polynomials --------------------------------------------------------------

class BothZero(QGoppaError):
    pass


class NotSquareFree(QGoppaError):
    pass


# -- linear codes and matrices ------------------------------------------------

class DimensionMismatch(QGoppaError):
    pass


class EnumerationBoundExceeded(QGoppaError):
    pass


class TableBoundExceeded(QGoppaError):
    pass


# -- curves and places --------------------------------------------------------

class EvenDegreeModel(QGoppaError):
    pass


class DegreeTooSmall(QGoppaError):
    pass


class NotEnoughSplitPairs(QGoppaError):
    pass


class EvaluationAtSupport(QGoppaError):
    pass


# -- Goppa construction -------------------------------------------------------

class DuplicateAlpha(QGoppaError):
    pass


class RamifiedPlaceInPairs(QGoppaError):
    pass


class EvenExtensionDegree(QGoppaError):
    pass


# -- quantum codes ------------------------------------------------------------

class ZeroWeight(QGoppaError):
    pass


class NotDualContained(QGoppaError):
    pass


class LengthMismatch(QGoppaError):
    pass


class EmptyNormalizerComplement(QGoppaError):
    pass


class NoSelfDualBasis(QGoppaError):
    pass


# -- tower arithmetic ---------------------------------------------------------

class JOutOfRange(QGoppaError):
    pass


class EvenM(QGoppaError):
    pass


# -- warnings -----------------------------------------------------------------

class NonCanonicalModulusWarning(UserWarning):
    """A modulus outside the built-in table was chosen by search; printed
    generator powers then agree with external systems only up to field
    isomorphism."""


class ParameterRangeWarning(UserWarning):
    """A construction parameter lies outside the range for which the
    dimension/distance bounds are guaranteed."""


class NonIntegerFormulaWarning(UserWarning):
    """A closed-form genus expression did not evaluate to an integer."""
