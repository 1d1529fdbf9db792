"""Exception hierarchy shared by all modules."""


class MeanDivError(Exception):
    """Base class for every error raised by this package."""


class DomainError(MeanDivError, ValueError):
    """An argument lies outside the domain of the operation."""


class PositivityError(DomainError):
    """A probability weight is zero or negative."""


class NormalizationError(DomainError):
    """Weights do not sum to one within tolerance."""


class ArityError(MeanDivError, ValueError):
    """Wrong number of entries (too few weights, or mismatched lengths)."""


class NumericError(MeanDivError, ArithmeticError):
    """A computation produced a non-finite value."""


class SingularityError(NumericError):
    """A denominator vanished (or went non-finite) at a reported location."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class UnsupportedError(MeanDivError, LookupError):
    """The requested object has no associated generator or evaluator."""


class ConfigurationError(MeanDivError, ValueError):
    """A chain definition could not be parsed or resolved."""
