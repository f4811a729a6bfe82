"""Exception hierarchy shared across the package.

Every error is a :class:`ValueError` so callers that only care about bad
input can catch one type; the CLI maps each subclass to an exit code.
"""


class BoundsError(ValueError):
    """Base class for all rejected inputs."""


class FormatError(BoundsError):
    """A state or operator file could not be parsed."""


class DimensionError(BoundsError):
    """Operands have incompatible shapes."""


class CoordinateError(BoundsError):
    """A bound index such as ``d``, ``(p, q)`` or ``(t, p, q)`` is out of range."""


class NotUnitaryError(BoundsError):
    """An operator failed the unitarity check."""


class InvalidStateError(BoundsError):
    """A vector or density matrix is not a valid quantum state."""


class SearchCapError(BoundsError):
    """Exhaustive permutation search was requested beyond the size cap."""
