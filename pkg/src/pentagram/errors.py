"""Exception types raised across the package."""


class PentagramError(ValueError):
    """Base class for all domain errors raised by this package."""


class CoincidentPoints(PentagramError):
    pass


class CoincidentLines(PentagramError):
    pass


class DegenerateCrossRatio(PentagramError):
    pass


class NotCollinear(PentagramError):
    pass


class SingularMatrix(PentagramError):
    pass


class DegenerateWindow(PentagramError):
    """A 5-vertex window of a polygon is not in general position."""


class DegenerateFrame(PentagramError):
    pass


class GenerationFailed(PentagramError):
    pass


class InvalidP(PentagramError):
    """Some p-coordinate equals 0 or 1."""


class SingularMonodromy(PentagramError):
    pass


class BadWeight(PentagramError):
    pass


class InterpolationDegenerate(PentagramError):
    pass


class InvalidLetter(PentagramError):
    pass


class NoForcedBreak(PentagramError):
    pass


class Overlap(PentagramError):
    """Two tiles of one monomial share a column."""
