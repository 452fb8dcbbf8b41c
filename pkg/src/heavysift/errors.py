"""Exception hierarchy for heaviness computations.

Every error is a ValueError so callers that only care about bad input can
catch the builtin; the CLI maps the whole family to a usage exit status.
"""


class HeavinessError(ValueError):
    """Base class for all heavysift precondition violations."""


class HorizonError(HeavinessError):
    """Raised when a horizon or time window is out of range."""


class DomainMismatchError(HeavinessError):
    """Raised when a point or observable does not belong to the system's domain."""


class NonInvertibleSystemError(HeavinessError):
    """Raised when a two-sided operation is requested on a non-invertible system."""


class InvalidSystemError(HeavinessError):
    """Raised when a finite system violates its construction invariants."""


class NotNormalizedError(HeavinessError):
    """Raised when an odd-length continued fraction is used where even length is required."""


class EmptyCandidatesError(HeavinessError):
    """Raised when a candidate search is given nothing to search."""


class SpecParseError(HeavinessError):
    """Raised when a textual system, observable or number spec cannot be parsed."""
