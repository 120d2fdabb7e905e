"""Exception types raised by the horoball package."""


class HoroballError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPoint(HoroballError, ValueError):
    """Point indices out of range, or a coordinate negative/non-finite."""


class SpaceMismatch(HoroballError, ValueError):
    """A point (or pair of objects) does not belong to the given space."""


class InvalidLambda(HoroballError, ValueError):
    """Interpolation parameter outside [0, 1]."""


class ZeroDirection(HoroballError, ValueError):
    """Ray construction with coincident base and through points."""


class NotOnComplex(HoroballError, ValueError):
    """Model coordinates lie in none of the five embedded quadrants."""


class EmptySet(HoroballError, ValueError):
    """An operation that needs at least one point received none."""


class NegativeRadius(HoroballError, ValueError):
    """A ball radius was negative."""


class DegenerateCenter(HoroballError, ValueError):
    """Support step requested at a point coinciding with the active center."""


class InfeasibleStart(HoroballError, ValueError):
    """Initial iterate lies outside the feasible ball."""


class InvalidConfig(HoroballError, ValueError):
    """Solver configuration with nonpositive iteration count or diameter."""


class TooFewIterations(HoroballError, ValueError):
    """Circumcenter solver called with fewer than 16 iterations."""


class MultiplePointsPerLeg(HoroballError, ValueError):
    """Spider closed form requires at most one point per leg."""


class EmptyGrid(HoroballError, ValueError):
    """Brute-force grid contains no evaluation points."""


class InstanceError(HoroballError, ValueError):
    """Malformed instance file; the message carries field diagnostics."""
