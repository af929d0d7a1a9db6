"""Exception types shared across the package."""


class EtaqError(Exception):
    """Base class for every error raised by this package."""


class DomainError(EtaqError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SingularMatrixError(EtaqError, ArithmeticError):
    """Exact elimination hit a rank-deficient matrix."""


class NonUnitLeadingCoefficientError(EtaqError, ArithmeticError):
    """A series whose leading coefficient is zero or unknown cannot be inverted."""


class InsufficientPrecisionError(EtaqError, ValueError):
    """A coefficient beyond the trusted precision of a series was requested."""


class FractionalLeadingPowerError(EtaqError, ValueError):
    """The eta quotient has no expansion in integer powers of q."""


class CuspNotOnLevelError(EtaqError, ValueError):
    """The cusp denominator does not divide the governing level."""


class ResourceLimitError(EtaqError, RuntimeError):
    """A brute-force search space exceeds the configured bound."""
