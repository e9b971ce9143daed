"""Exception types raised across the package."""


class BorderError(ValueError):
    """Base class for all data and argument errors raised by nnborder."""


class DimensionMismatch(BorderError):
    pass


class CoincidentPoints(BorderError):
    """Two points share a location (within tolerance) where that is not allowed."""


class DuplicateConflict(CoincidentPoints):
    """Identical coordinates carry different class labels."""


class EmptySet(BorderError):
    pass


class InvalidSpec(BorderError):
    pass
