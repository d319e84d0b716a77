"""Exception types shared across the package."""


class SincmatError(Exception):
    """Base class for all package errors."""


class DomainError(SincmatError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class ResolutionError(SincmatError, ValueError):
    """A quadrature rule or truncation level is too coarse for the request.

    The message always states the minimum resolution that would be accepted.
    """


class NumericalError(SincmatError, ArithmeticError):
    """A numerical invariant failed: solver non-convergence, asymmetry, overflow."""


class ConfigError(SincmatError, ValueError):
    """An experiment configuration is invalid."""
