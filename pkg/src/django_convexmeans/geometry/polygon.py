from __future__ import annotations

import math
from collections.abc import Iterable
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Any

from django_convexmeans.exceptions import DegenerateGeometryError
from django_convexmeans.geometry.scalar import EXACT
from django_convexmeans.geometry.scalar import Field
from django_convexmeans.geometry.scalar import FloatField
from django_convexmeans.geometry.scalar import Scalar

Matrix2 = Sequence[Sequence[Any]]


@dataclass(frozen=True)
class Point2:
    """A planar point or direction with coordinates in one scalar backend."""

    x: Scalar
    y: Scalar

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point2:
        return Point2(-self.x, -self.y)

    def __mul__(self, factor: Any) -> Point2:
        if isinstance(factor, Point2):
            return NotImplemented
        return Point2(self.x * factor, self.y * factor)

    __rmul__ = __mul__

    def __truediv__(self, divisor: Any) -> Point2:
        return Point2(self.x / divisor, self.y / divisor)

    def dot(self, other: Point2) -> Scalar:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point2) -> Scalar:
        return self.x * other.y - self.y * other.x

    def coerce(self, field: Field) -> Point2:
        return Point2(field.coerce(self.x), field.coerce(self.y))

    def to_float(self) -> tuple[float, float]:
        return (float(self.x), float(self.y))

    def __iter__(self) -> Any:
        yield self.x
        yield self.y


def point(x: Any, y: Any, field: Field | None = None) -> Point2:
    """Build a point, coercing both coordinates into the backend."""
    field = field or infer_field((x, y))
    return Point2(field.coerce(x), field.coerce(y))


def infer_field(values: Iterable[Any]) -> Field:
    """Pick the float backend as soon as any value is a float."""
    for value in values:
        if isinstance(value, Point2):
            if isinstance(value.x, float) or isinstance(value.y, float):
                return FloatField()
        elif isinstance(value, (list, tuple)):
            if any(isinstance(v, float) for v in value):
                return FloatField()
        elif isinstance(value, float):
            return FloatField()
    return EXACT


def common_field(*polygons: ConvexPolygon) -> Field:
    """Exact if all polygons are exact, else the first float backend."""
    for polygon in polygons:
        if not polygon.field.exact:
            return polygon.field
    return EXACT


def _as_point(value: Any, field: Field) -> Point2:
    if isinstance(value, Point2):
        return value.coerce(field)
    x, y = value
    return Point2(field.coerce(x), field.coerce(y))


def extent(points: Iterable[Point2]) -> float:
    """Longer side of the bounding box, the length unit of float checks."""
    xs = []
    ys = []
    for p in points:
        xs.append(float(p.x))
        ys.append(float(p.y))
    if not xs:
        return 0.0
    return max(max(xs) - min(xs), max(ys) - min(ys))


def relative_sign(value: Scalar, norm: float, field: Field) -> int:
    """
    Sign of value / norm.

    The exact backend ignores ``norm``. The float backend compares the
    normalized value with its tolerance, so predicates do not depend on the
    size of the body.
    """
    if field.exact or not norm > 0.0:
        return field.sign(value)
    return field.sign(float(value) / norm)


def half_turn(direction: Point2, field: Field) -> int:
    """Split directions into the half-turns (-90, 90] and (90, 270]."""
    sx = field.sign(direction.x)
    if sx > 0 or (sx == 0 and field.sign(direction.y) > 0):
        return 0
    return 1


@dataclass(frozen=True)
class HalfPlane:
    """The closed half-plane {x : a.x <= rho} with outer normal a."""

    a: Point2
    rho: Scalar

    def value(self, x: Point2) -> Scalar:
        """Signed slack a.x - rho; positive means outside."""
        return self.a.dot(x) - self.rho

    def contains(self, x: Point2, field: Field, unit: float = 1.0) -> bool:
        """Membership up to a slack of ``unit`` lengths in float mode."""
        return relative_sign(self.value(x), self.norm() * unit, field) <= 0

    def norm(self) -> float:
        return math.hypot(float(self.a.x), float(self.a.y))


class Location(str, Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class ConvexPolygon:
    """
    A planar convex body stored as its canonical vertex cycle.

    Vertices run strictly counterclockwise, start at the lexicographically
    smallest vertex and contain no collinear triples, so two polygons over
    the exact backend are equal exactly when their vertex lists are.

    The constructor expects points already in convex position (either
    orientation); use :func:`convex_hull` for arbitrary point sets.

    Raises:
        DegenerateGeometryError: If the points do not bound a convex region
            of positive area
    """

    __slots__ = ("_vertices", "_field", "_extent")

    def __init__(
        self,
        vertices: Iterable[Any],
        field: Field | None = None,
    ) -> None:
        raw = list(vertices)
        if field is None:
            field = infer_field(raw)
        self._field = field
        self._vertices = _canonicalize(
            [_as_point(v, field) for v in raw], field
        )
        self._extent = extent(self._vertices)

    @property
    def vertices(self) -> tuple[Point2, ...]:
        return self._vertices

    @property
    def extent(self) -> float:
        return self._extent

    @property
    def field(self) -> Field:
        return self._field

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Any:
        return iter(self._vertices)

    def edges(self) -> list[tuple[Point2, Point2]]:
        """Counterclockwise edges (v_i, v_i+1)."""
        n = len(self._vertices)
        return [
            (self._vertices[i], self._vertices[(i + 1) % n]) for i in range(n)
        ]

    def halfplanes(self) -> list[HalfPlane]:
        """The H-representation, one half-plane per edge."""
        planes = []
        for start, end in self.edges():
            edge = end - start
            normal = Point2(edge.y, -edge.x)
            planes.append(HalfPlane(normal, normal.dot(start)))
        return planes

    def area(self) -> Scalar:
        twice = self._field.zero
        for start, end in self.edges():
            twice = twice + start.cross(end)
        return twice / 2

    def vertex_centroid(self) -> Point2:
        total = Point2(self._field.zero, self._field.zero)
        for vertex in self._vertices:
            total = total + vertex
        return total / len(self._vertices)

    def with_field(self, field: Field) -> ConvexPolygon:
        """Re-express the polygon in another backend."""
        if field == self._field:
            return self
        return ConvexPolygon(
            [v.coerce(field) for v in self._vertices], field
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConvexPolygon):
            return NotImplemented
        if len(self) != len(other):
            return False
        if self._field.exact and other._field.exact:
            return self._vertices == other._vertices
        field = self._field if not self._field.exact else other._field
        # float canonical starts may differ by a near-tie, so match cyclically
        mine = [v.coerce(field) for v in self._vertices]
        theirs = [v.coerce(field) for v in other._vertices]
        unit = max(self._extent, other._extent)
        n = len(mine)
        for shift in range(n):
            if all(
                _same_point(mine[i], theirs[(i + shift) % n], unit, field)
                for i in range(n)
            ):
                return True
        return False

    def __hash__(self) -> int:
        return hash((self._field.exact, len(self._vertices)))

    def __repr__(self) -> str:
        coords = ", ".join(f"({v.x}, {v.y})" for v in self._vertices)
        return f"ConvexPolygon[{self._field.name}]({coords})"


def _points_equal(lhs: Point2, rhs: Point2, field: Field) -> bool:
    return field.equal(lhs.x, rhs.x) and field.equal(lhs.y, rhs.y)


def _length(v: Point2) -> float:
    return math.hypot(float(v.x), float(v.y))


def _same_point(p: Point2, q: Point2, unit: float, field: Field) -> bool:
    if field.exact:
        return _points_equal(p, q, field)
    return relative_sign(_length(p - q), unit, field) == 0


def _lex_key(p: Point2) -> tuple[Scalar, Scalar]:
    return (p.x, p.y)


def _canonicalize(points: list[Point2], field: Field) -> tuple[Point2, ...]:
    if len(points) < 3:
        raise DegenerateGeometryError(
            f"A polygon needs at least 3 vertices, got {len(points)}"
        )

    unit = extent(points)

    # Drop repeated consecutive vertices
    cycle = [
        p
        for i, p in enumerate(points)
        if not _same_point(p, points[(i + 1) % len(points)], unit, field)
    ]
    if len(cycle) < 3:
        raise DegenerateGeometryError(
            "Polygon has fewer than 3 distinct points"
        )

    twice_area = field.zero
    for i, p in enumerate(cycle):
        twice_area = twice_area + p.cross(cycle[(i + 1) % len(cycle)])
    orientation = relative_sign(twice_area, unit * unit, field)
    if orientation == 0:
        raise DegenerateGeometryError("Polygon has zero area")
    if orientation < 0:
        cycle.reverse()

    kept = []
    n = len(cycle)
    for i, vertex in enumerate(cycle):
        incoming = vertex - cycle[i - 1]
        outgoing = cycle[(i + 1) % n] - vertex
        lengths = _length(incoming) * _length(outgoing)
        turn = relative_sign(incoming.cross(outgoing), lengths, field)
        if turn < 0:
            raise DegenerateGeometryError(
                "Vertices are not in convex position"
            )
        if turn == 0:
            if relative_sign(incoming.dot(outgoing), lengths, field) < 0:
                raise DegenerateGeometryError(
                    "Vertices are not in convex position"
                )
            continue
        kept.append(vertex)
    if len(kept) < 3:
        raise DegenerateGeometryError("Polygon has zero area")

    # A left-turning cycle that winds twice crosses each half-turn twice
    switches = 0
    for i in range(len(kept)):
        before = kept[(i + 1) % len(kept)] - kept[i]
        after = kept[(i + 2) % len(kept)] - kept[(i + 1) % len(kept)]
        if half_turn(before, field) != half_turn(after, field):
            switches += 1
    if switches != 2:
        raise DegenerateGeometryError("Vertices are not in convex position")

    start = min(range(len(kept)), key=lambda i: _lex_key(kept[i]))
    return tuple(kept[start:] + kept[:start])


def convex_hull(
    points: Iterable[Any],
    field: Field | None = None,
) -> ConvexPolygon:
    """
    Convex hull of a finite planar point set (Andrew's monotone chain).

    Args:
        points: Point2 instances or (x, y) pairs
        field: Scalar backend; inferred from the coordinates when omitted

    Returns:
        The canonical hull; every vertex is one of the input points

    Raises:
        DegenerateGeometryError: If the points are collinear or fewer than
            three are distinct
    """
    raw = list(points)
    if field is None:
        field = infer_field(raw)
    ordered = sorted((_as_point(p, field) for p in raw), key=_lex_key)

    def _turn(a: Point2, b: Point2, c: Point2) -> int:
        first = b - a
        second = c - a
        lengths = _length(first) * _length(second)
        return relative_sign(first.cross(second), lengths, field)

    def chain(sequence: Iterable[Point2]) -> list[Point2]:
        result: list[Point2] = []
        for p in sequence:
            while len(result) >= 2 and _turn(result[-2], result[-1], p) <= 0:
                result.pop()
            result.append(p)
        return result

    lower = chain(ordered)
    upper = chain(reversed(ordered))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateGeometryError(
            "Point set is collinear or has fewer than 3 distinct points"
        )
    return ConvexPolygon(hull, field)


def support(P: ConvexPolygon, u: Any) -> tuple[Scalar, list[Point2]]:
    """
    Evaluate the support function h_P(u) = max over P of u.x.

    Returns:
        The support value and the face attaining it, one vertex or the two
        endpoints of an edge in counterclockwise order

    Raises:
        DegenerateGeometryError: For the zero direction
    """
    field = P.field
    direction = _as_point(u, field)
    if field.is_zero(direction.x) and field.is_zero(direction.y):
        raise DegenerateGeometryError("Support direction must be nonzero")
    values = [direction.dot(v) for v in P.vertices]
    best = values[0]
    for value in values[1:]:
        if field.compare(value, best) > 0:
            best = value
    indices = [i for i, v in enumerate(values) if field.equal(v, best)]
    if len(indices) == 2 and indices == [0, len(values) - 1]:
        indices = [len(values) - 1, 0]
    return best, [P.vertices[i] for i in indices]


def support_value(P: ConvexPolygon, u: Any) -> Scalar:
    return support(P, u)[0]


def contains_point(P: ConvexPolygon, x: Any) -> Location:
    """Classify a point against every edge half-plane of P."""
    field = P.field
    target = _as_point(x, field)
    on_boundary = False
    for plane in P.halfplanes():
        side = relative_sign(
            plane.value(target), plane.norm() * P.extent, field
        )
        if side > 0:
            return Location.OUTSIDE
        if side == 0:
            on_boundary = True
    return Location.BOUNDARY if on_boundary else Location.INTERIOR


def contains_origin_in_interior(P: ConvexPolygon) -> bool:
    origin = Point2(P.field.zero, P.field.zero)
    return contains_point(P, origin) is Location.INTERIOR


def transform(
    P: ConvexPolygon,
    L: Matrix2,
    t: Any = None,
) -> ConvexPolygon:
    """
    Image of P under x -> L x + t.

    Raises:
        DegenerateGeometryError: If L is singular
    """
    field = P.field
    (a, b), (c, d) = (
        (field.coerce(L[0][0]), field.coerce(L[0][1])),
        (field.coerce(L[1][0]), field.coerce(L[1][1])),
    )
    if field.is_zero(a * d - b * c):
        raise DegenerateGeometryError("Linear map is singular")
    shift = (
        _as_point(t, field)
        if t is not None
        else Point2(field.zero, field.zero)
    )
    images = [
        Point2(a * v.x + b * v.y + shift.x, c * v.x + d * v.y + shift.y)
        for v in P.vertices
    ]
    return ConvexPolygon(images, field)


def negate(P: ConvexPolygon) -> ConvexPolygon:
    return ConvexPolygon([-v for v in P.vertices], P.field)


def scale(P: ConvexPolygon, rho: Any) -> ConvexPolygon:
    """The rho-dilatation rho * P."""
    field = P.field
    factor = field.coerce(rho)
    if field.is_zero(factor):
        raise DegenerateGeometryError("Cannot dilate by zero")
    return ConvexPolygon([v * factor for v in P.vertices], field)


def translate(P: ConvexPolygon, t: Any) -> ConvexPolygon:
    shift = _as_point(t, P.field)
    return ConvexPolygon([v + shift for v in P.vertices], P.field)


def is_symmetric(P: ConvexPolygon) -> Point2 | None:
    """
    Return the center c with P = 2c - P, or None if P is not symmetric.

    A centrally symmetric polygon has an even vertex count and its center
    is the vertex centroid.
    """
    if len(P) % 2:
        return None
    center = P.vertex_centroid()
    reflected = translate(negate(P), center * 2)
    return center if reflected == P else None


def is_subset(K: ConvexPolygon, C: ConvexPolygon) -> bool:
    """Whether K lies in C, boundary contact allowed."""
    field = C.field
    planes = C.halfplanes()
    return all(
        plane.contains(v.coerce(field), field, C.extent)
        for v in K.vertices
        for plane in planes
    )


def support_dominates(
    K: ConvexPolygon,
    C: ConvexPolygon,
    directions: Iterable[Any] | None = None,
) -> bool:
    """
    Check h_K(u) <= h_C(u) on the given directions.

    Defaults to the facet normals of both polygons, which decides K in C.
    """
    if directions is None:
        directions = [plane.a for plane in K.halfplanes()]
        directions += [plane.a for plane in C.halfplanes()]
    field = C.field
    return all(
        field.compare(support_value(K, u), support_value(C, u)) <= 0
        for u in directions
    )


def _distance_to_polygon(x: tuple[float, float], P: ConvexPolygon) -> float:
    vertices = [v.to_float() for v in P.vertices]
    n = len(vertices)
    inside = True
    best = math.inf
    for i in range(n):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % n]
        ex, ey = bx - ax, by - ay
        wx, wy = x[0] - ax, x[1] - ay
        if ex * wy - ey * wx < 0:
            inside = False
        length2 = ex * ex + ey * ey
        t = max(0.0, min(1.0, (wx * ex + wy * ey) / length2))
        best = min(best, math.hypot(wx - t * ex, wy - t * ey))
    return 0.0 if inside else best


def hausdorff_distance(P: ConvexPolygon, Q: ConvexPolygon) -> float:
    """
    Hausdorff distance between two convex polygons.

    For convex bodies both one-sided distances are attained at vertices.
    """
    forward = max(_distance_to_polygon(v.to_float(), Q) for v in P.vertices)
    backward = max(_distance_to_polygon(v.to_float(), P) for v in Q.vertices)
    return max(forward, backward)
