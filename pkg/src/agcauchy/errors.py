"""Exception hierarchy shared by every module of the package."""


class AgCauchyError(Exception):
    """Base class for all package errors."""


# finite fields
class NotPrime(AgCauchyError, ValueError):
    pass


class ReducibleModulus(AgCauchyError, ValueError):
    pass


class FieldMismatch(AgCauchyError, TypeError):
    pass


class DivisionByZero(AgCauchyError, ZeroDivisionError):
    pass


# polynomials and series
class ZeroPolynomial(AgCauchyError, ValueError):
    pass


class ArityMismatch(AgCauchyError, ValueError):
    pass


class DimensionMismatch(AgCauchyError, ValueError):
    pass


class EmptySupport(AgCauchyError, ValueError):
    pass


# Cauchy problems
class InfiniteDeltaSet(AgCauchyError, ValueError):
    pass


class InconsistentBasis(AgCauchyError, ArithmeticError):
    """Two eligible basis elements predict different coefficients."""


# codes
class DegreeBoundViolation(AgCauchyError, ValueError):
    pass


class TooFewPoints(AgCauchyError, ValueError):
    pass


class InvalidCurveMetadata(AgCauchyError, ValueError):
    """Genus or pole orders disagree with the evaluation-rank check."""


class LengthMismatch(AgCauchyError, ValueError):
    pass


# decoding
class EmptySyndromes(AgCauchyError, ValueError):
    pass


class InitialDataOutsideZ(AgCauchyError, ValueError):
    pass


class RankDeficient(AgCauchyError, ArithmeticError):
    pass


class Inconsistent(AgCauchyError, ArithmeticError):
    pass


class WeightTooLarge(AgCauchyError, ValueError):
    pass
