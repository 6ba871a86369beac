class BrauerReduxError(ValueError):
    """Base class for every error raised by this package."""


class ReciprocityError(BrauerReduxError):
    """Local invariants of a global class do not sum to zero."""


class NoPointsError(BrauerReduxError):
    """A minimum over closed points was requested on an empty point set."""

    def __init__(self, what="no points"):
        super().__init__(what)


class BoundExhaustedError(BrauerReduxError):
    """An enumeration search found nothing below its bound."""


class ScenarioError(BrauerReduxError):
    """A scenario payload does not match its schema."""
