"""Exception types shared across the package."""


class NoBoundState(ValueError):
    """Requested energy lies at or above the potential's asymptotic value."""


class NoClassicalRegion(ValueError):
    """Requested energy lies below the minimum of the effective potential."""


class NumericalFailure(RuntimeError):
    """A quadrature or root-finding step failed to converge."""


class StateNotFound(RuntimeError):
    """The shooting eigensolver could not bracket the requested state."""


class CalibrationFailure(RuntimeError):
    """No mass-energy constant in the search window reproduces the reference."""
