"""Exception types shared across the toolkit."""


class ToolkitError(ValueError):
    """Base class for all domain errors raised by this package."""


class ParseError(ToolkitError):
    """Malformed textual or JSON input (exit code 2 territory in the CLI)."""


class DimensionMismatchError(ToolkitError):
    """Vector or frame length does not match the ambient rank."""


class UnsupportedConeError(ToolkitError):
    """Operation requires the other cone variant."""


class InvalidIdealError(ToolkitError):
    """Subgroup is not a usable order ideal."""


class OrderingError(ToolkitError):
    """Order-theoretic precondition violated (e.g. interpolation endpoints)."""


class NoUniqueStateError(ToolkitError):
    """Group is not totally ordered, so the unique-state construction refuses."""


class DecompositionError(ToolkitError):
    """No nonnegative rational convex decomposition exists."""


class CocycleViolationError(ToolkitError):
    """A cochain or edge-sign assignment fails the cocycle condition.

    Carries the first offending simplex in ``simplex``.
    """

    def __init__(self, message: str, simplex=None):
        super().__init__(message)
        self.simplex = simplex


class FrameRankError(ToolkitError):
    """Frame vectors are linearly dependent."""
