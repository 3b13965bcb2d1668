"""Exceptions raised across the package."""


class CrossingFamiliesError(Exception):
    """Base class for all package errors."""


class GeometryError(CrossingFamiliesError, ValueError):
    """Invalid geometric input."""


class DegenerateInputError(GeometryError):
    """Zero-length segment or leg."""


class SharedVertexError(GeometryError):
    """Two graphs that must be vertex-disjoint share a vertex."""


class KindMismatchError(GeometryError):
    """Family or graph kind does not fit the operation."""


class InvalidSizeError(GeometryError):
    """Size argument out of the admissible range."""


class OnBoundaryError(GeometryError):
    """Point lies on one of the partition lines."""


class IndexOutOfRangeError(GeometryError):
    """Position arguments outside 1 <= i < j <= m."""


class SchemaError(CrossingFamiliesError, ValueError):
    """Instance document does not follow the schema."""


class ConstructionError(CrossingFamiliesError):
    """A construction could not establish one of its invariants."""


class GeneralPositionViolationError(ConstructionError):
    """Input violates the required general position mode."""


class DegenerateLabelingError(ConstructionError):
    """Horizontal tie between vertices of a triangle pair."""


class PrecisionExhaustedError(ConstructionError):
    """Interval arithmetic could not certify a comparison at the precision ceiling."""


class SeparationViolationError(ConstructionError):
    """A separating line does not strictly separate its part."""


class TransversalNotConvexError(ConstructionError):
    """Some transversal of the parts is not in convex position."""


class PartitionFailureError(ConstructionError):
    """Wedge partition does not hold exactly m points per wedge."""


class NotConvexPositionError(ConstructionError):
    """Point set is not in convex position or not in the expected block order."""


class SearchExhaustedError(ConstructionError):
    """The wedge search ran out of candidates."""


class CertificationError(ConstructionError):
    """An exact post-condition of a construction failed."""


class ResourceLimitError(CrossingFamiliesError):
    """Instance exceeds a configured cap."""

    def __init__(self, cap_name: str, cap: int, requested: int):
        super().__init__(f"{cap_name}={cap} exceeded (requested {requested})")
        self.cap_name = cap_name
        self.cap = cap
        self.requested = requested


class TieUnresolvedError(CrossingFamiliesError):
    """Two matching lengths could not be separated at the precision ceiling."""
