"""Exception types shared across the library.

The CLI maps these onto its exit-code contract: geometry failures exit 3,
numerical failures exit 4 (argparse itself handles usage errors with exit 2).
"""


class ACRingError(Exception):
    """Base class for all library errors."""


class SingularGeometryError(ACRingError):
    """The line of charge intersects the ring path (field denominator vanishes)."""


class NumericsError(ACRingError):
    """A numerical procedure could not meet its accuracy contract."""


class BasisTooSmallError(NumericsError):
    """Requested spectrum levels sit too close to the plane-wave cutoff edge."""


class ContinuationError(NumericsError):
    """Branch continuation could not be resolved; refine the sweep sampling."""
