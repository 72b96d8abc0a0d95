"""Exception types shared across the package."""


class SemigroupError(Exception):
    """Base class for all package-specific errors."""


class InvalidInput(SemigroupError, ValueError):
    """Malformed argument: empty generator list, bad bounds, unbounded request."""


class NotCofinite(InvalidInput):
    """gcd of the generators is not 1, so the monoid misses infinitely many integers."""


class NotMember(SemigroupError, ValueError):
    """An operation required an element of the semigroup and was given a gap."""


class ResourceLimit(SemigroupError, RuntimeError):
    """A configured cap (set size, Cartesian product, face count) was exceeded."""


class InternalConsistencyError(SemigroupError, AssertionError):
    """A mathematically guaranteed identity failed; this always indicates a bug."""
