from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from django_convexmeans.exceptions import DegenerateGeometryError
from django_convexmeans.exceptions import DomainError
from django_convexmeans.geometry.polygon import ConvexPolygon
from django_convexmeans.geometry.polygon import Point2
from django_convexmeans.geometry.polygon import convex_hull
from django_convexmeans.geometry.polygon import negate
from django_convexmeans.geometry.polygon import scale
from django_convexmeans.geometry.polygon import translate
from django_convexmeans.geometry.scalar import EXACT
from django_convexmeans.geometry.scalar import Field
from django_convexmeans.geometry.scalar import FloatField
from django_convexmeans.geometry.scalar import Scalar
from django_convexmeans.golden.house import golden_house_points
from django_convexmeans.optimize.containment import minkowski_asymmetry

logger = logging.getLogger(__name__)

# Annulus radii of the random polygon generator
INNER_RADIUS = 0.5
OUTER_RADIUS = 1.0

MAX_REJECTIONS = 1000


@dataclass(frozen=True)
class HexagonMember:
    """A re-centered hexagon of the family and the translation applied."""

    tau: Scalar
    polygon: ConvexPolygon
    translation: Point2
    s: Scalar


def hexagon_family_member(
    tau: Any,
    field: Field | None = None,
) -> HexagonMember:
    """
    Add (0, -tau) to the golden house and re-center.

    The re-centering translation is whatever the asymmetry LP finds; by
    the mirror symmetry of the golden house it is vertical.

    Raises:
        DomainError: If tau is outside [1, phi^2]
    """
    if field is None:
        field = FloatField() if isinstance(tau, float) else EXACT
    value = field.coerce(tau)
    upper = field.phi * field.phi
    if field.compare(value, field.one) < 0 or field.compare(value, upper) > 0:
        raise DomainError(
            f"tau must lie in [1, phi^2], got {tau}", name="tau", value=tau
        )
    points = golden_house_points(field) + [Point2(field.zero, -value)]
    hexagon = convex_hull(points, field)
    result = minkowski_asymmetry(hexagon)
    shift = -result.center_point
    logger.debug(
        "Hexagon tau=%s recentered by %s, s=%s", value, shift, result.s
    )
    return HexagonMember(
        tau=value,
        polygon=translate(hexagon, shift),
        translation=shift,
        s=result.s,
    )


def hexagon_family(tau: Any, field: Field | None = None) -> ConvexPolygon:
    """The Minkowski centered member of the hexagon family at tau."""
    return hexagon_family_member(tau, field).polygon


def regular_ngon(n: int, tolerance: float | None = None) -> ConvexPolygon:
    """
    Regular n-gon with unit circumradius and a vertex on top.

    Its centroid 0 is the Minkowski center.

    Raises:
        DomainError: If n < 3
    """
    if not isinstance(n, int) or n < 3:
        raise DomainError(f"n must be an integer >= 3, got {n}", "n", n)
    field = FloatField(tolerance)
    return ConvexPolygon(
        [
            Point2(math.sin(angle), math.cos(angle))
            for angle in (2 * math.pi * k / n for k in range(n))
        ],
        field,
    )


def midpoint_deviation(P: ConvexPolygon, s: Any) -> float:
    """
    Largest distance from a vertex of -(1/s) P to its closest edge midpoint.

    Zero for regular polygons with an odd number of vertices.
    """
    P = P.with_field(FloatField())
    shrunk = scale(negate(P), 1 / float(s))
    midpoints = [((a.x + b.x) / 2, (a.y + b.y) / 2) for a, b in P.edges()]
    return max(
        min(math.hypot(v.x - mx, v.y - my) for mx, my in midpoints)
        for v in shrunk.vertices
    )


def random_polygon(
    rng: np.random.Generator,
    vertex_range: tuple[int, int] = (5, 12),
    min_vertices: int = 5,
    tolerance: float | None = None,
) -> ConvexPolygon:
    """
    Hull of points drawn uniformly from an annulus.

    The number of points is drawn from ``vertex_range``; hulls with fewer
    than ``min_vertices`` vertices are rejected and redrawn.
    """
    field = FloatField(tolerance)
    low, high = vertex_range
    for _ in range(MAX_REJECTIONS):
        count = int(rng.integers(low, high + 1))
        radii = np.sqrt(
            rng.uniform(INNER_RADIUS**2, OUTER_RADIUS**2, size=count)
        )
        angles = rng.uniform(0.0, 2 * math.pi, size=count)
        points = [
            Point2(float(r * math.cos(t)), float(r * math.sin(t)))
            for r, t in zip(radii, angles)
        ]
        try:
            hull = convex_hull(points, field)
        except DegenerateGeometryError:
            continue
        if len(hull) >= min_vertices:
            return hull
    raise DegenerateGeometryError(
        f"No polygon with {min_vertices} vertices after "
        f"{MAX_REJECTIONS} draws"
    )


@dataclass(frozen=True)
class HouseParams:
    """
    A mirror-symmetric house.

    Vertical walls x = +-1 run from ``lower`` to ``upper``; the roof peaks
    at (0, apex) and the floor dips to (0, base). ``extra`` holds further
    points (x, y) added together with their mirror images (-x, y).
    """

    lower: float
    upper: float
    apex: float
    base: float
    extra: tuple[tuple[float, float], ...] = ()

    def is_valid(self) -> bool:
        return self.base <= self.lower < self.upper < self.apex

    def polygon(self, tolerance: float | None = None) -> ConvexPolygon:
        """
        Raises:
            DegenerateGeometryError: For parameters that do not describe a
                house
        """
        if not self.is_valid():
            raise DegenerateGeometryError(f"Invalid house parameters {self}")
        points = [
            Point2(-1.0, self.lower),
            Point2(1.0, self.lower),
            Point2(1.0, self.upper),
            Point2(-1.0, self.upper),
            Point2(0.0, self.apex),
            Point2(0.0, self.base),
        ]
        for x, y in self.extra:
            points += [Point2(float(x), float(y)), Point2(-float(x), float(y))]
        return convex_hull(points, FloatField(tolerance))


def random_house(rng: np.random.Generator) -> HouseParams:
    """Random house with walls of height up to 1 and up to two extra pairs."""
    lower = -float(rng.uniform(0.2, 1.5))
    upper = lower + float(rng.uniform(0.1, 1.5))
    apex = upper + float(rng.uniform(0.1, 2.0))
    base = lower - float(rng.uniform(0.0, 1.5))
    extra = []
    for _ in range(int(rng.integers(0, 3))):
        x = float(rng.uniform(0.1, 0.95))
        bulge = float(rng.uniform(1.0, 1.3))
        if rng.uniform() < 0.5:
            y = upper + (apex - upper) * (1 - x) * bulge
        else:
            y = lower - (lower - base) * (1 - x) * bulge
        extra.append((x, y))
    return HouseParams(lower, upper, apex, base, tuple(extra))
