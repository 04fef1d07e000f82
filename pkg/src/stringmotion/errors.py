"""Exception hierarchy shared across the package."""


class StringMotionError(Exception):
    """Base class for errors raised by this package."""


class ResourceLimitError(StringMotionError):
    """A requested computation exceeds the configured size caps."""


class ConsistencyError(StringMotionError):
    """An internal cross-check failed; results must not be trusted."""


class CyclicProductError(ValueError):
    """A wedge word contains a directed cycle, so it is zero in cohomology."""
