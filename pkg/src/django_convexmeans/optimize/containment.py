from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from django_convexmeans.exceptions import DegenerateGeometryError
from django_convexmeans.exceptions import GeometryError
from django_convexmeans.exceptions import NotContainedError
from django_convexmeans.exceptions import NotMinkowskiCenteredError
from django_convexmeans.exceptions import SymmetricBodyError
from django_convexmeans.geometry.polygon import ConvexPolygon
from django_convexmeans.geometry.polygon import Location
from django_convexmeans.geometry.polygon import Point2
from django_convexmeans.geometry.polygon import common_field
from django_convexmeans.geometry.polygon import contains_origin_in_interior
from django_convexmeans.geometry.polygon import contains_point
from django_convexmeans.geometry.polygon import is_subset
from django_convexmeans.geometry.polygon import negate
from django_convexmeans.geometry.polygon import scale
from django_convexmeans.geometry.polygon import translate
from django_convexmeans.geometry.scalar import EXACT
from django_convexmeans.geometry.scalar import Field
from django_convexmeans.geometry.scalar import FloatField
from django_convexmeans.geometry.scalar import Scalar
from django_convexmeans.optimize.lp import EQ
from django_convexmeans.optimize.lp import LE
from django_convexmeans.optimize.lp import LPProblem
from django_convexmeans.optimize.lp import lp_solve

logger = logging.getLogger(__name__)

Vector = tuple[Scalar, ...]
Facet = tuple[Sequence[Any], Any]


def _dot(a: Sequence[Scalar], b: Sequence[Scalar], field: Field) -> Scalar:
    total = field.zero
    for x, y in zip(a, b):
        total = total + x * y
    return total


def _extreme(
    values: Sequence[Scalar],
    field: Field,
    largest: bool,
) -> tuple[Scalar, int]:
    best_index = 0
    for i in range(1, len(values)):
        order = field.compare(values[i], values[best_index])
        if (order > 0) if largest else (order < 0):
            best_index = i
    return values[best_index], best_index


def _as_vertices(body: Any, field: Field) -> list[Vector]:
    points = body.vertices if isinstance(body, ConvexPolygon) else body
    return [tuple(field.coerce(c) for c in p) for p in points]


def _as_facets(body: Any, field: Field) -> list[tuple[Vector, Scalar]]:
    if isinstance(body, ConvexPolygon):
        facets = [
            ((field.coerce(h.a.x), field.coerce(h.a.y)), field.coerce(h.rho))
            for h in body.halfplanes()
        ]
    else:
        facets = [
            (tuple(field.coerce(c) for c in normal), field.coerce(offset))
            for normal, offset in body
        ]
    if field.exact:
        return facets
    # unit normals keep LP entries on the scale of the body
    unit_facets = []
    for normal, offset in facets:
        length = math.hypot(*(float(c) for c in normal))
        if length == 0.0:
            raise DegenerateGeometryError("Facet normal must be nonzero")
        unit_facets.append(
            (tuple(c / length for c in normal), offset / length)
        )
    return unit_facets


def _has_float(value: Any) -> bool:
    if isinstance(value, float):
        return True
    if isinstance(value, (list, tuple, Point2)):
        return any(_has_float(item) for item in value)
    return False


def _infer_field(*bodies: Any) -> Field:
    polygons = [b for b in bodies if isinstance(b, ConvexPolygon)]
    if any(not p.field.exact for p in polygons):
        return common_field(*polygons)
    raw = [b for b in bodies if not isinstance(b, ConvexPolygon)]
    if any(_has_float(body) for body in raw):
        return FloatField()
    return EXACT


@dataclass(frozen=True)
class Contact:
    """A touching point p of K on the boundary facet with outer normal a."""

    p: Vector
    a: Vector
    weight: Scalar


@dataclass(frozen=True)
class ContainmentResult:
    """
    Minimal homothety K in t + rho * C.

    Attributes:
        rho: The minimal dilatation factor
        t: The translation attaining it
        touching: Contacts at the tight facets; the weights are the
            normalized LP multipliers, so sum(weight * a) = 0 certifies
            that rho cannot be decreased by any translation
        field: Scalar backend of the computation
    """

    rho: Scalar
    t: Vector
    touching: tuple[Contact, ...]
    field: Field
    translation_fixed: bool = False

    @property
    def certificate(self) -> tuple[Contact, ...]:
        """Contacts with positive weight."""
        return tuple(
            c for c in self.touching if self.field.sign(c.weight) > 0
        )

    def certificate_holds(self) -> bool:
        """Check that 0 is the weighted combination of certificate normals."""
        field = self.field
        contacts = self.certificate
        if not contacts:
            return False
        total_weight = field.zero
        combination = [field.zero] * len(self.t)
        for contact in contacts:
            total_weight = total_weight + contact.weight
            combination = [
                s + contact.weight * a for s, a in zip(combination, contact.a)
            ]
        return field.equal(total_weight, field.one) and all(
            field.is_zero(s) for s in combination
        )


def _homothety(
    vertices: list[Vector],
    facets: list[tuple[Vector, Scalar]],
    field: Field,
    fix_translation: Sequence[Any] | None,
) -> ContainmentResult:
    if not vertices or not facets:
        raise DegenerateGeometryError("Containment needs nonempty bodies")
    dimension = len(vertices[0])
    if len(vertices) < dimension + 1 or len(facets) < dimension + 1:
        raise DegenerateGeometryError(
            "Containment needs full-dimensional bodies"
        )

    # Variables: rho >= 0, then the free translation
    problem = LPProblem(
        objective=[field.one] + [field.zero] * dimension,
        free=frozenset(range(1, dimension + 1)),
        field=field,
    )
    supports = []
    for normal, offset in facets:
        values = [_dot(normal, v, field) for v in vertices]
        height, index = _extreme(values, field, largest=True)
        supports.append(index)
        problem.add([-offset] + [-a for a in normal], LE, -height)
    if fix_translation is not None:
        for k, value in enumerate(fix_translation):
            row = [field.zero] * (dimension + 1)
            row[k + 1] = field.one
            problem.add(row, EQ, value)

    solution = lp_solve(problem)
    rho = solution.x[0]
    t = tuple(solution.x[1:])

    multipliers = [-solution.duals[i] for i in range(len(facets))]
    total = field.zero
    for mu in multipliers:
        if field.sign(mu) > 0:
            total = total + mu

    touching = []
    for i, (normal, _) in enumerate(facets):
        if not solution.is_tight(problem, i):
            continue
        mu = multipliers[i]
        weight = (
            mu / total
            if field.sign(mu) > 0 and fix_translation is None
            else field.zero
        )
        touching.append(Contact(vertices[supports[i]], normal, weight))

    logger.debug(
        "Homothety rho=%s t=%s with %d tight facets",
        rho,
        t,
        len(touching),
    )
    return ContainmentResult(
        rho=rho,
        t=t,
        touching=tuple(touching),
        field=field,
        translation_fixed=fix_translation is not None,
    )


def min_homothety(
    K: Any,
    C: Any,
    fix_translation: Sequence[Any] | None = None,
    field: Field | None = None,
) -> ContainmentResult:
    """
    Smallest rho such that K lies in t + rho * C for some translation t.

    Works in any dimension. For each facet {a.x <= b} of C the LP row is
    ``max_v a.v <= a.t + rho * b``; rho is minimized.

    Args:
        K: A ConvexPolygon or a list of vertex coordinate tuples
        C: A ConvexPolygon or a list of (normal, offset) facets
        fix_translation: Pin t to this point instead of optimizing it
        field: Scalar backend; inferred from the inputs when omitted

    Raises:
        DegenerateGeometryError: If either body is not full-dimensional
    """
    if field is None:
        field = _infer_field(K, C)
    return _homothety(
        _as_vertices(K, field),
        _as_facets(C, field),
        field,
        fix_translation,
    )


def is_opt_contained(
    K: ConvexPolygon,
    C: ConvexPolygon,
) -> tuple[bool, ContainmentResult]:
    """
    Decide whether K is optimally contained in C.

    K is optimally contained when K lies in C and no translate of a smaller
    dilate of C contains K, i.e. the minimal homothety factor is 1. For
    0-symmetric bodies this is equivalent to K touching the boundary of C;
    that shortcut is evaluated as a cross-check.

    Raises:
        NotContainedError: If K is not a subset of C
    """
    field = common_field(K, C)
    K = K.with_field(field)
    C = C.with_field(field)
    if not is_subset(K, C):
        raise NotContainedError("K is not contained in C")

    result = min_homothety(K, C, field=field)
    optimal = field.equal(result.rho, field.one)

    if K == negate(K) and C == negate(C):
        touches = any(
            contains_point(C, v) is Location.BOUNDARY for v in K.vertices
        )
        if touches != optimal:
            logger.warning(
                "Boundary-contact shortcut (%s) disagrees with LP (rho=%s)",
                touches,
                result.rho,
            )
    return optimal, result


@dataclass(frozen=True)
class AsymmetryResult:
    """
    Minkowski asymmetry s and a Minkowski center c of a body.

    ``touching`` holds points of bd(C - c) on bd(-s (C - c)).
    """

    s: Scalar
    center: Vector
    touching: tuple[Vector, ...]
    field: Field

    @property
    def center_point(self) -> Point2:
        return Point2(self.center[0], self.center[1])


def asymmetry_lp(
    vertices: Sequence[Sequence[Any]],
    facets: Sequence[Facet],
    field: Field | None = None,
) -> AsymmetryResult:
    """
    Minkowski asymmetry of a V- and H-described body in any dimension.

    The bilinear condition C - c in s (c - C) becomes linear in
    (rho, d) with d = (rho + 1) c: for each facet {a.x <= b},
    ``a.d - rho * b <= min_v a.v``.
    """
    if field is None:
        field = _infer_field(vertices, facets)
    points = _as_vertices(vertices, field)
    planes = _as_facets(facets, field)
    dimension = len(points[0])
    if len(points) < dimension + 1 or len(planes) < dimension + 1:
        raise DegenerateGeometryError(
            "Asymmetry needs a full-dimensional body"
        )

    problem = LPProblem(
        objective=[field.one] + [field.zero] * dimension,
        free=frozenset(range(1, dimension + 1)),
        field=field,
    )
    lowest = []
    for normal, offset in planes:
        values = [_dot(normal, v, field) for v in points]
        depth, index = _extreme(values, field, largest=False)
        lowest.append(index)
        problem.add([-offset] + list(normal), LE, depth)
    solution = lp_solve(problem)
    s = solution.x[0]
    center = tuple(d / (s + 1) for d in solution.x[1:])

    touching = []
    for i in range(len(planes)):
        if solution.is_tight(problem, i):
            vertex = points[lowest[i]]
            contact = tuple(v - c for v, c in zip(vertex, center))
            if contact not in touching:
                touching.append(contact)
    logger.debug("Asymmetry s=%s center=%s", s, center)
    return AsymmetryResult(
        s=s, center=center, touching=tuple(touching), field=field
    )


def minkowski_asymmetry(C: ConvexPolygon) -> AsymmetryResult:
    """Minkowski asymmetry and center of a convex polygon."""
    return asymmetry_lp(C.vertices, _as_facets(C, C.field), C.field)


def recenter(C: ConvexPolygon) -> ConvexPolygon:
    """Translate C so that 0 is its Minkowski center."""
    result = minkowski_asymmetry(C)
    return translate(C, -result.center_point)


def is_minkowski_centered(C: ConvexPolygon) -> bool:
    """
    Whether 0 attains the Minkowski asymmetry of C.

    Bodies without 0 in their interior are never centered; the pinned LP
    has no solution for them.
    """
    if not contains_origin_in_interior(C):
        return False
    field = C.field
    zero = (field.zero, field.zero)
    s = minkowski_asymmetry(C).s
    pinned = min_homothety(C, negate(C), fix_translation=zero, field=field)
    return field.equal(pinned.rho, s)


def _origin_in_hull(points: Sequence[Point2], field: Field) -> bool:
    origin = Point2(field.zero, field.zero)
    first, second, third = points
    sides = [
        field.sign((b - a).cross(origin - a))
        for a, b in ((first, second), (second, third), (third, first))
    ]
    if any(sides):
        return not (min(sides) < 0 < max(sides))
    # collinear triple: 0 must lie on one of its segments
    for a, b in ((first, second), (second, third), (third, first)):
        if field.sign((origin - a).dot(origin - b)) <= 0:
            return True
    return False


def touching_hull_contains_zero(
    C: ConvexPolygon,
) -> tuple[Point2, Point2, Point2]:
    """
    Three points of bd(C) on bd(-s C) whose convex hull contains 0.

    Candidates are the vertices of C on the boundary of -s C followed by
    the vertices of -s C on the boundary of C.

    Raises:
        SymmetricBodyError: If s(C) = 1
        NotMinkowskiCenteredError: If 0 is not a Minkowski center of C
    """
    field = C.field
    result = minkowski_asymmetry(C)
    if field.equal(result.s, field.one):
        raise SymmetricBodyError("Symmetric bodies have no touching triple")
    if not is_minkowski_centered(C):
        raise NotMinkowskiCenteredError(
            "Body is not Minkowski centered", center=result.center
        )

    dilate = scale(negate(C), result.s)
    candidates: list[Point2] = []
    for vertex in C.vertices:
        if contains_point(dilate, vertex) is Location.BOUNDARY:
            candidates.append(vertex)
    for vertex in dilate.vertices:
        if contains_point(C, vertex) is Location.BOUNDARY and not any(
            field.equal(vertex.x, c.x) and field.equal(vertex.y, c.y)
            for c in candidates
        ):
            candidates.append(vertex)

    for triple in itertools.combinations(candidates, 3):
        if _origin_in_hull(triple, field):
            logger.debug("Touching triple %s", triple)
            return triple
    raise GeometryError("No touching triple contains the origin")
