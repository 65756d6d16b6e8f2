"""Exception hierarchy shared by every module of the package."""


class OvalError(ValueError):
    """Base class for all errors raised by eightoval."""


class InvalidAxes(OvalError):
    """Semi-axes violate ``a >= b > 0`` or are not finite."""


class DegenerateGeometry(OvalError):
    """A geometric step failed that should not fail for valid input."""


class NonConvergence(OvalError):
    """An iterative evaluation hit its iteration cap."""


class InvalidRange(OvalError):
    """A sweep range or step is malformed."""


class GridTooLarge(OvalError):
    """A sweep would evaluate more cells than allowed."""
