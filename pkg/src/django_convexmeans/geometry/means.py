from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from django_convexmeans.exceptions import DegenerateGeometryError
from django_convexmeans.exceptions import DomainError
from django_convexmeans.exceptions import OriginNotInteriorError
from django_convexmeans.geometry.polygon import ConvexPolygon
from django_convexmeans.geometry.polygon import HalfPlane
from django_convexmeans.geometry.polygon import Point2
from django_convexmeans.geometry.polygon import common_field
from django_convexmeans.geometry.polygon import contains_origin_in_interior
from django_convexmeans.geometry.polygon import convex_hull
from django_convexmeans.geometry.polygon import half_turn
from django_convexmeans.geometry.polygon import is_subset
from django_convexmeans.geometry.polygon import negate
from django_convexmeans.geometry.polygon import scale
from django_convexmeans.geometry.polygon import translate
from django_convexmeans.geometry.scalar import Field

logger = logging.getLogger(__name__)


def minkowski_sum(
    P: ConvexPolygon,
    Q: ConvexPolygon | Point2,
) -> ConvexPolygon:
    """
    Minkowski sum P + Q by merging the edge sequences by angle.

    Both canonical vertex cycles start at their lexicographic minimum, where
    the edge directions begin just after -90 degrees, so the sum starts at
    the sum of the two minima and the merge needs only cross products.

    A single point as Q translates P.
    """
    if isinstance(Q, Point2):
        return translate(P, Q)
    field = common_field(P, Q)
    P = P.with_field(field)
    Q = Q.with_field(field)

    p_edges = [end - start for start, end in P.edges()]
    q_edges = [end - start for start, end in Q.edges()]
    current = P.vertices[0] + Q.vertices[0]
    result = [current]
    i = j = 0
    while i < len(p_edges) or j < len(q_edges):
        if i == len(p_edges):
            step = q_edges[j]
            j += 1
        elif j == len(q_edges):
            step = p_edges[i]
            i += 1
        else:
            order = _edge_order(p_edges[i], q_edges[j], field)
            if order < 0:
                step = p_edges[i]
                i += 1
            elif order > 0:
                step = q_edges[j]
                j += 1
            else:
                step = p_edges[i] + q_edges[j]
                i += 1
                j += 1
        current = current + step
        result.append(current)
    # the walk closes at its starting point
    return ConvexPolygon(result[:-1], field)


def _edge_order(e: Point2, f: Point2, field: Field) -> int:
    """Negative if e comes first counterclockwise, 0 if parallel."""
    half_e = half_turn(e, field)
    half_f = half_turn(f, field)
    if half_e != half_f:
        return -1 if half_e < half_f else 1
    return -field.sign(e.cross(f))


def _clip(
    vertices: list[Point2],
    plane: HalfPlane,
    field: Field,
) -> list[Point2]:
    clipped = []
    n = len(vertices)
    for k in range(n):
        current = vertices[k]
        following = vertices[(k + 1) % n]
        value_current = plane.value(current)
        value_following = plane.value(following)
        side_current = field.sign(value_current)
        side_following = field.sign(value_following)
        if side_current <= 0:
            clipped.append(current)
        if side_current * side_following < 0:
            ratio = value_current / (value_current - value_following)
            clipped.append(current + (following - current) * ratio)
    return clipped


def intersect(P: ConvexPolygon, Q: ConvexPolygon) -> ConvexPolygon:
    """
    Intersection of two convex polygons by successive half-plane clipping.

    Raises:
        DegenerateGeometryError: If the intersection is empty or not
            full-dimensional
    """
    field = common_field(P, Q)
    P = P.with_field(field)
    Q = Q.with_field(field)
    vertices = list(P.vertices)
    for plane in Q.halfplanes():
        vertices = _clip(vertices, plane, field)
        if len(vertices) < 3:
            raise DegenerateGeometryError(
                "Intersection is empty or lower-dimensional"
            )
    try:
        return ConvexPolygon(vertices, field)
    except DegenerateGeometryError as e:
        raise DegenerateGeometryError(
            "Intersection is empty or lower-dimensional"
        ) from e


def polar(P: ConvexPolygon) -> ConvexPolygon:
    """
    Polar body {a : a.x <= 1 for all x in P}.

    Each facet {a.x <= rho} of P contributes the vertex a / rho.

    Raises:
        OriginNotInteriorError: If 0 is not an interior point of P
    """
    if not contains_origin_in_interior(P):
        raise OriginNotInteriorError("Polar requires 0 in the interior")
    return ConvexPolygon(
        [plane.a / plane.rho for plane in P.halfplanes()], P.field
    )


def _check_weight(weight: Any, field: Field) -> Any:
    value = field.coerce(weight)
    if field.sign(value) < 0 or field.compare(value, field.one) > 0:
        raise DomainError(
            f"Mean weight must lie in [0, 1], got {weight}",
            name="weight",
            value=weight,
        )
    return value


def mean_min(K: ConvexPolygon, C: ConvexPolygon) -> ConvexPolygon:
    return intersect(K, C)


def mean_max(K: ConvexPolygon, C: ConvexPolygon) -> ConvexPolygon:
    field = common_field(K, C)
    return convex_hull(
        [v.coerce(field) for v in K.vertices + C.vertices], field
    )


def mean_arith(
    K: ConvexPolygon,
    C: ConvexPolygon,
    weight: Any = None,
) -> ConvexPolygon:
    """
    Weighted arithmetic mean (1 - weight) K + weight C.

    The default weight is one half.
    """
    field = common_field(K, C)
    w = _check_weight(weight if weight is not None else field.one / 2, field)
    if field.is_zero(w):
        return K.with_field(field)
    if field.equal(w, field.one):
        return C.with_field(field)
    return minkowski_sum(
        scale(K.with_field(field), field.one - w),
        scale(C.with_field(field), w),
    )


def mean_harm(
    K: ConvexPolygon,
    C: ConvexPolygon,
    weight: Any = None,
) -> ConvexPolygon:
    """
    Weighted harmonic mean ((1 - weight) K° + weight C°)°.

    Raises:
        OriginNotInteriorError: If 0 is not interior to both bodies
    """
    return polar(mean_arith(polar(K), polar(C), weight))


@dataclass(frozen=True)
class MeansChain:
    """The four symmetrizations of a body, smallest first."""

    minimum: ConvexPolygon
    harmonic: ConvexPolygon
    arithmetic: ConvexPolygon
    maximum: ConvexPolygon

    def layers(self) -> list[tuple[str, ConvexPolygon]]:
        return [
            ("minimum", self.minimum),
            ("harmonic", self.harmonic),
            ("arithmetic", self.arithmetic),
            ("maximum", self.maximum),
        ]

    def inclusions_hold(self) -> bool:
        """minimum in harmonic in arithmetic in maximum."""
        bodies = [body for _, body in self.layers()]
        return all(
            is_subset(inner, outer)
            for inner, outer in zip(bodies, bodies[1:])
        )


def means_chain(C: ConvexPolygon) -> MeansChain:
    """
    Symmetrize C against -C with all four means.

    Raises:
        OriginNotInteriorError: If 0 is not an interior point of C
    """
    if not contains_origin_in_interior(C):
        raise OriginNotInteriorError(
            "Symmetrizations require 0 in the interior"
        )
    reflected = negate(C)
    chain = MeansChain(
        minimum=mean_min(C, reflected),
        harmonic=mean_harm(C, reflected),
        arithmetic=mean_arith(C, reflected),
        maximum=mean_max(C, reflected),
    )
    logger.debug(
        "Means chain vertex counts: %s",
        [len(body) for _, body in chain.layers()],
    )
    return chain
