"""Exception hierarchy shared by every module.

Input-validation failures subclass :class:`ValueError` so callers that only
care about "bad argument" can catch the builtin; numeric failures (divergent
integrals, negative radicands) derive from :class:`NumericError`.
"""


class InfoBoundError(Exception):
    """Base class for all package errors."""


class DomainError(InfoBoundError, ValueError):
    """An argument lies outside the domain of the operation."""


class NumericError(InfoBoundError, ArithmeticError):
    """A computation cannot produce a finite, trustworthy result."""


# units
class DimensionMismatch(DomainError):
    pass


class DivisionByZero(NumericError, ZeroDivisionError):
    pass


class NonIntegerPowerOfDimensioned(DomainError):
    pass


class NonFiniteValue(DomainError):
    pass


# cosmology
class NonPositiveScaleFactor(DomainError):
    pass


class NegativeRadicand(NumericError):
    pass


class DivergentIntegral(NumericError):
    pass


class QuadratureError(NumericError):
    """Adaptive quadrature exhausted its subdivision budget."""


class NonPositiveDensity(DomainError):
    pass


class NonPositiveRadius(DomainError):
    pass


# bounds
class NonPositiveMass(DomainError):
    pass


class NegativeEntropy(DomainError):
    pass


class NonPositiveArea(DomainError):
    pass


class NonPositiveTime(DomainError):
    pass


class BoundBelowOneBit(DomainError):
    pass


# vacuum
class ModeBudgetTooLarge(DomainError):
    pass


class NonPositiveCutoff(DomainError):
    pass


class NonPositiveInputs(DomainError):
    pass


class NonPositiveLength(DomainError):
    pass


class InsufficientSamples(DomainError):
    pass


class NonMonotoneTimes(DomainError):
    pass


# quantum
class QubitCountOutOfRange(DomainError):
    pass


class BasisIndexOutOfRange(DomainError):
    pass


class InvalidTargets(DomainError):
    pass


class NonUnitaryMatrix(DomainError):
    pass


class PrecisionOutOfRange(DomainError):
    pass


# predictability
class AmplificationNotAboveOne(DomainError):
    pass


class NonPositiveLyapunov(DomainError):
    pass


# config
class ConfigError(InfoBoundError):
    pass


class ParseError(ConfigError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownKey(ConfigError):
    def __init__(self, key: str, line: int | None = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"unknown config key {key!r}{where}")
        self.key = key
        self.line = line


class RangeViolation(ConfigError):
    def __init__(self, key: str, value, reason: str):
        super().__init__(f"{key} = {value!r}: {reason}")
        self.key = key
        self.value = value
