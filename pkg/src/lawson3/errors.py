"""Exception hierarchy for the lawson3 package."""


class LawsonError(Exception):
    """Base class for all package errors."""


class DegenerateVector(LawsonError):
    """A vector too short to normalize."""


class AntipodalOrEqual(LawsonError):
    """Two sphere points are equal or antipodal, so no unique minor arc exists."""


class InvalidCircle(LawsonError):
    """A great-circle spanning pair is not orthonormal."""


class NotOrthogonal(LawsonError):
    """A matrix expected to be in SO(4) is not."""


class OrderOverflow(LawsonError):
    """Group closure exceeded the allowed order (bad tolerance or generators)."""


class TileLocationAmbiguous(LawsonError):
    """A transformed tile center could not be located in a unique tile."""


class LineSearchStalled(LawsonError):
    """Backtracking found no sufficient-decrease step; the mesh is degenerate."""


class WeldAmbiguous(LawsonError):
    """A vertex has merge candidates that are not mutually coincident."""


class NotClosed(LawsonError):
    """A mesh expected to be closed has boundary or non-manifold edges."""


class NotOrientable(LawsonError):
    """No consistent triangle orientation exists."""


class Disconnected(LawsonError):
    """A mesh expected to be connected has several components."""


class OddEuler(LawsonError):
    """Euler characteristic is odd, so the genus is undefined."""


class ZeroMixedArea(LawsonError):
    """A vertex has no usable incident triangle area."""


class InvalidParams(LawsonError):
    """Surface parameters outside the supported range."""
