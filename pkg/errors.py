"""
Exception hierarchy for tuckerbound.

Every error derives from TuckerError. Value-type errors also derive from
ValueError so callers catching ValueError keep working.
"""


class TuckerError(Exception):
    """Base class for all tuckerbound errors."""


class ConstructionError(TuckerError, ValueError):
    """Raised when a tensor or matrix cannot be built from the given values."""


class ModeError(TuckerError, ValueError):
    """Raised when a mode index is out of range."""


class ShapeError(TuckerError, ValueError):
    """Raised when operand shapes are incompatible."""


class DimensionError(ShapeError):
    """Raised when a matrix does not match the extent of the mode it acts on."""


class FactorError(TuckerError, ValueError):
    """Raised when a factor matrix is not columnwise orthonormal."""


class RankError(TuckerError, ValueError):
    """Raised when a requested rank is out of range."""


class OrderError(TuckerError, ValueError):
    """Raised when a mode order is not a permutation."""


class ParameterError(TuckerError, ValueError):
    """Raised for invalid construction, configuration or sweep parameters."""


class SizeError(TuckerError, ValueError):
    """Raised when an exhaustive enumeration would be too large."""


class InputError(TuckerError, ValueError):
    """Raised for malformed solver input or malformed files."""


class ConvergenceError(TuckerError, ArithmeticError):
    """Raised when an iterative solver exceeds its iteration cap."""
