"""Exception types shared across the package."""


class IsopticaError(Exception):
    """Base class for all domain errors raised by isoptica."""


class ParallelLines(IsopticaError):
    """Two lines are parallel (or equal) where an intersection was required."""


class PointInsideShape(IsopticaError):
    """A point expected strictly outside a convex body is inside or on it."""


class BracketingFailed(IsopticaError):
    """A grid-bracketed root search did not isolate the expected roots."""


class BetaOutOfRange(IsopticaError):
    """A chord angle beta left the admissible interval for the billiard."""


class NotCoprime(IsopticaError):
    """p and q must be coprime."""


class OutOfRange(IsopticaError):
    """An argument violates its documented range."""


class ParityObstruction(IsopticaError):
    """q - p is even: only the disk admits the requested construction."""


class UnsupportedForPolygon(IsopticaError):
    """The operation needs support-function derivatives, which polygons lack."""


class NoSignChange(IsopticaError):
    """beta(psi) - alpha/2 never changes sign and is not identically zero."""


class DegenerateFit(IsopticaError):
    """Circle fit is ill-posed, e.g. the samples are (nearly) collinear."""


class ConvexityViolated(IsopticaError):
    """h + h'' (or h itself) is not strictly positive on the validation grid."""

    def __init__(self, message, min_value=None, phi=None):
        super().__init__(message)
        self.min_value = min_value
        self.phi = phi


class ShapeFileError(IsopticaError):
    """A shape description file is malformed; `field` names the bad entry."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field
