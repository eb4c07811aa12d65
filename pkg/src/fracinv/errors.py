"""Exception types shared across the package."""


class FracinvError(Exception):
    """Base class for all package-specific failures."""


class DomainError(FracinvError, ValueError):
    """An argument lies outside an operation's mathematical domain."""


class AccuracyError(FracinvError, ArithmeticError):
    """A result could not be computed to the requested accuracy.

    Carries the achieved error estimate so callers can decide whether
    a degraded value is still useful.
    """

    def __init__(self, message, est_abs_error=None):
        super().__init__(message)
        self.est_abs_error = est_abs_error


class ExpressionError(FracinvError, ValueError):
    """A data expression could not be parsed."""
