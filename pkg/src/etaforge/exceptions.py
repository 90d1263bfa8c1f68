"""Exception hierarchy shared by all etaforge modules."""


class EtaforgeError(Exception):
    pass


class SeriesError(EtaforgeError, ArithmeticError):
    pass


class DivisionByZeroSeries(SeriesError, ZeroDivisionError):
    pass


class NonUnitLeadingCoefficient(SeriesError):
    pass


class ConstantTermPresent(SeriesError):
    pass


class NonIntegerExponent(SeriesError):
    pass


class OffsetMismatch(SeriesError):
    pass


class NonInvertibleComposition(SeriesError):
    pass


class FieldError(EtaforgeError, ArithmeticError):
    pass


class UnsplitDenominator(FieldError):
    pass


class LogTermPresent(FieldError):
    pass


class PoleAtExpansionPoint(FieldError):
    pass


class NonIntegralParams(EtaforgeError, ValueError):
    pass


class NoPassingMultiplier(EtaforgeError, ValueError):
    pass


class QuartetViolatesRelation(EtaforgeError, ValueError):
    pass


class InsufficientTruncation(EtaforgeError):
    pass


class NotIntegrableAtZero(EtaforgeError, ValueError):
    pass


class ToleranceNotMet(EtaforgeError):
    pass
