"""Exception types raised across the library."""


class L1PathsError(Exception):
    """Base class for all library errors."""


class TooFewVertices(L1PathsError):
    pass


class NotSimple(L1PathsError):
    """Boundary self-intersects; carries the offending edge index pair."""

    def __init__(self, i, j, msg=None):
        self.edges = (i, j)
        super().__init__(msg or f"edges {i} and {j} intersect")


class NotGeneralPosition(L1PathsError):
    """Two vertices share an x- or y-coordinate."""

    def __init__(self, axis, i, j, msg=None):
        self.axis = axis
        self.vertices = (i, j)
        super().__init__(msg or f"vertices {i} and {j} share {axis}")


class DegenerateRegion(L1PathsError):
    pass


class DegenerateChord(L1PathsError):
    pass


class BaseNotOnBoundary(L1PathsError):
    pass


class PointOutsideRegion(L1PathsError):
    pass


class PointOutsidePolygon(L1PathsError):
    pass


class PointNotInCell(L1PathsError):
    pass


class PointNotOnBottom(L1PathsError):
    pass


class NotAncestor(L1PathsError):
    pass


class DepthOutOfRange(L1PathsError):
    pass


class IndexOutOfRange(L1PathsError):
    pass


class GenerationFailed(L1PathsError):
    pass


class SnapshotError(L1PathsError):
    pass
