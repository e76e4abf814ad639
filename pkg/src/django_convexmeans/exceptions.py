from __future__ import annotations

from typing import Any


class ConvexMeansException(Exception):
    """Custom exception for django-convexmeans errors."""

    pass


class GeometryError(ConvexMeansException):
    """Exception raised when a geometric precondition is violated."""

    pass


class DegenerateGeometryError(GeometryError):
    """
    Raised for inputs or results that are not full-dimensional.

    Covers collinear point sets, fewer than three distinct points, empty or
    lower-dimensional intersections, singular linear maps and zero
    directions.
    """

    pass


class OriginNotInteriorError(GeometryError):
    """Raised when an operation needs 0 in the interior of a body."""

    pass


class NotContainedError(GeometryError):
    """Raised when an optimal-containment test is called with K not in C."""

    pass


class NotMinkowskiCenteredError(GeometryError):
    """
    Raised when a body is expected to have 0 as its Minkowski center.

    Attributes:
        center: The Minkowski center that was actually found
    """

    def __init__(self, message: str, center: Any = None) -> None:
        super().__init__(message)
        self.center = center


class SymmetricBodyError(GeometryError):
    """Raised when an operation needs a body with asymmetry above 1."""

    pass


class ScalarError(ConvexMeansException):
    """Exception raised for malformed scalar literals or backend mixups."""

    pass


class NotRepresentableError(ScalarError):
    """Raised when an exact square root leaves the field Q(sqrt 5)."""

    pass


class PolygonFormatError(ScalarError):
    """Raised for polygon documents that do not follow the JSON schema."""

    pass


class DomainError(ConvexMeansException):
    """
    Raised when a parameter lies outside its admissible range.

    Attributes:
        name: The parameter name
        value: The offending value
    """

    def __init__(
        self,
        message: str,
        name: str | None = None,
        value: Any = None,
    ) -> None:
        super().__init__(message)
        self.name = name
        self.value = value


class LPError(ConvexMeansException):
    """Exception raised when the simplex solver cannot produce an optimum."""

    pass


class LPInfeasibleError(LPError):
    """Raised when the constraint system of a linear program is empty."""

    pass


class LPUnboundedError(LPError):
    """Raised when the objective of a linear program is unbounded below."""

    pass


class LPPivotLimitError(LPError):
    """
    Raised when the solver exceeds its configured pivot budget.

    Attributes:
        pivots: Number of pivots performed before giving up
    """

    def __init__(self, message: str, pivots: int) -> None:
        super().__init__(message)
        self.pivots = pivots
