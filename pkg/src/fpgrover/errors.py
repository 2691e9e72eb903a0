"""Exception types shared across the package."""


class FPGroverError(Exception):
    """Base class for all errors raised by fpgrover."""


class InvalidInputError(FPGroverError, ValueError):
    """A numeric argument is outside its domain (non-finite, nonpositive, ...)."""


class InvalidParametersError(InvalidInputError):
    """A Grover parameter triple (n, f, n_s) violates its bounds."""


class FracBitsMismatchError(FPGroverError, ValueError):
    """Two fixed-point values with different fractional-bit counts were combined."""


class ResourceLimitError(FPGroverError):
    """A full state-vector run was requested above the configured qubit cap."""


class InsufficientDataError(FPGroverError, LookupError):
    """A ratio needs sweep points that are not present in the records."""
