"""Exception hierarchy shared by all gyroball modules."""


class GyroballError(Exception):
    """Base class for all gyroball errors."""


class DimensionError(GyroballError):
    """Operands have incompatible shapes or dimensions."""


class OutOfBallError(GyroballError):
    """A point lies on or outside the open unit ball."""


class NotAnIsometryError(GyroballError):
    """A black-box map failed isometry validation."""

    def __init__(self, message, max_residual=None):
        super().__init__(message)
        self.max_residual = max_residual


class InternalConsistencyError(GyroballError):
    """An internal invariant was violated; signals a bug, not bad input."""


class BoundaryClampWarning(UserWarning):
    """A rounding-level out-of-ball result was rescaled back inside the ball."""
