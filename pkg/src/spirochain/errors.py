"""Exception types raised across the package."""


class SpiroChainError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedDegree(SpiroChainError):
    """A profile query met a vertex degree other than 2 or 4."""


class ChainTooShort(SpiroChainError):
    """Growth was attempted on a chain with fewer than two hexagons."""


class InvalidN(SpiroChainError):
    """A hexagon count outside the operation's admissible range."""


class InvalidProbabilities(SpiroChainError):
    """Link probabilities outside [0, 1] or not summing to 1."""


class NTooLarge(SpiroChainError):
    """Exhaustive enumeration was requested beyond the configured cap."""


class UndefinedBase(SpiroChainError):
    """An index base function is undefined or non-positive at a needed degree."""


class KindMismatch(SpiroChainError):
    """A vertex-kind index met an edge profile, or vice versa."""


class UnknownIndex(SpiroChainError):
    """Registry lookup for a name that is not registered."""


class MissingExponent(SpiroChainError):
    """A variable-exponent index was requested without an exponent."""


class DegenerateVariance(SpiroChainError):
    """Standardization was requested where the variance is zero."""


class EmptySample(SpiroChainError):
    """A sample statistic was requested on an empty sample."""


class SampleTooSmall(SpiroChainError):
    """A diagnostic needs more samples than were provided."""
