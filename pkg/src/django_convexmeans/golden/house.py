from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from django_convexmeans.exceptions import DomainError
from django_convexmeans.exceptions import NotRepresentableError
from django_convexmeans.geometry.polygon import ConvexPolygon
from django_convexmeans.geometry.polygon import Point2
from django_convexmeans.geometry.polygon import convex_hull
from django_convexmeans.geometry.scalar import EXACT
from django_convexmeans.geometry.scalar import Field
from django_convexmeans.geometry.scalar import FloatField
from django_convexmeans.geometry.scalar import Scalar
from django_convexmeans.optimize.containment import minkowski_asymmetry

logger = logging.getLogger(__name__)


def golden_house_points(field: Field = EXACT) -> list[Point2]:
    """The points p1, ..., p5 in their labelled order."""
    zero, one, phi = field.zero, field.one, field.phi
    return [
        Point2(-one, -one),
        Point2(-one, zero),
        Point2(zero, phi),
        Point2(one, zero),
        Point2(one, -one),
    ]


def golden_house(field: Field = EXACT) -> ConvexPolygon:
    """
    The golden house conv{(-1,-1), (-1,0), (0,phi), (1,0), (1,-1)}.

    It is Minkowski centered with asymmetry exactly phi.
    """
    return ConvexPolygon(golden_house_points(field), field)


def _norm(v: Point2, field: Field) -> Scalar:
    return field.sqrt(v.dot(v))


def _segment_intersection(
    a: Point2,
    b: Point2,
    c: Point2,
    d: Point2,
) -> Point2:
    """Intersection of the lines through [a, b] and [c, d]."""
    r = b - a
    s = d - c
    t = (c - a).cross(s) / r.cross(s)
    return a + r * t


def _similar(
    first: tuple[Point2, Point2, Point2],
    second: tuple[Point2, Point2, Point2],
    field: Field,
) -> bool:
    """Similarity up to reflection, via proportional squared side lengths."""

    def sides(tri: tuple[Point2, Point2, Point2]) -> list[Scalar]:
        a, b, c = tri
        lengths = [(b - a).dot(b - a), (c - b).dot(c - b), (a - c).dot(a - c)]
        return sorted(lengths)

    lhs = sides(first)
    rhs = sides(second)
    return all(
        field.equal(lhs[i] * rhs[0], rhs[i] * lhs[0]) for i in range(3)
    )


@dataclass(frozen=True)
class GoldenHouseInvariants:
    """Construction facts of the golden house and the two ratios for s."""

    s: Scalar
    center: tuple[Scalar, ...]
    antipodal_sides: bool
    equal_roof: bool
    similar_triangles: bool
    g: Point2
    alpha: Scalar
    beta: Scalar
    alpha_over_beta: Scalar
    sum_over_alpha: Scalar
    field: Field

    @property
    def holds(self) -> bool:
        field = self.field
        phi = field.phi
        return (
            self.antipodal_sides
            and self.equal_roof
            and self.similar_triangles
            and field.equal(self.s, phi)
            and all(field.is_zero(c) for c in self.center)
            and field.equal(self.alpha_over_beta, phi)
            and field.equal(self.sum_over_alpha, phi)
        )


def golden_house_invariants(field: Field = EXACT) -> GoldenHouseInvariants:
    """
    Verify the construction facts of the golden house.

    Checks p2 = -p4 and |p2 - p3| = |p4 - p3|, that the triangles
    conv{p1, -s p3, p5} and conv{p2, p3, p4} are similar, and evaluates
    g = [p1, p5] meet [p3, -s p3], alpha = |p3 - g| and beta = |p3|, whose
    ratios alpha / beta and (alpha + beta) / alpha both equal s.
    """
    p1, p2, p3, p4, p5 = golden_house_points(field)
    asymmetry = minkowski_asymmetry(golden_house(field))
    s = asymmetry.s
    far = p3 * (-s)

    g = _segment_intersection(p1, p5, p3, far)
    alpha = _norm(p3 - g, field)
    beta = _norm(p3, field)
    report = GoldenHouseInvariants(
        s=s,
        center=asymmetry.center,
        antipodal_sides=p2 == -p4,
        equal_roof=field.equal((p2 - p3).dot(p2 - p3), (p4 - p3).dot(p4 - p3)),
        similar_triangles=_similar((p1, far, p5), (p2, p3, p4), field),
        g=g,
        alpha=alpha,
        beta=beta,
        alpha_over_beta=alpha / beta,
        sum_over_alpha=(alpha + beta) / alpha,
        field=field,
    )
    logger.debug("Golden house invariants hold: %s", report.holds)
    return report


def _check_a(a: Any, field: Field) -> Scalar:
    value = field.coerce(a)
    if field.sign(value) <= 0 or field.compare(value, field.one) > 0:
        raise DomainError(
            f"Parameter a must lie in (0, 1], got {a}", name="a", value=a
        )
    return value


def h_of_a(a: Any, field: Field | None = None) -> Scalar:
    """
    Largest asymmetry compatible with the proof configuration at a.

    h(a) = 2a / (a + 1)^2 + sqrt(1 + 4a^2 / (a + 1)^4), increasing on
    (0, 1] with h(1) = phi.

    Raises:
        DomainError: If a is outside (0, 1]
        NotRepresentableError: If the exact backend cannot hold the root
    """
    if field is None:
        field = FloatField() if isinstance(a, float) else EXACT
    a = _check_a(a, field)
    square = (a + 1) * (a + 1)
    return 2 * a / square + field.sqrt(1 + 4 * a * a / (square * square))


def gamma(s: Any, a: Any, field: Field | None = None) -> Scalar:
    """
    gamma = (s - 1)(a + 1)^2 / (4a - (s - 1)(a - 1)^2).

    Raises:
        DomainError: If the denominator is not positive
    """
    if field is None:
        field = (
            FloatField()
            if isinstance(s, float) or isinstance(a, float)
            else EXACT
        )
    s = field.coerce(s)
    a = field.coerce(a)
    denominator = 4 * a - (s - 1) * (a - 1) * (a - 1)
    if field.sign(denominator) <= 0:
        raise DomainError(
            f"gamma is undefined for s={s}, a={a}", name="s", value=s
        )
    return (s - 1) * (a + 1) * (a + 1) / denominator


def _in_triangle(
    x: Point2,
    triangle: tuple[Point2, Point2, Point2],
    field: Field,
) -> bool:
    a, b, c = triangle
    sides = [
        field.sign((b - a).cross(x - a)),
        field.sign((c - b).cross(x - b)),
        field.sign((a - c).cross(x - c)),
    ]
    return not (min(sides) < 0 < max(sides))


@dataclass(frozen=True)
class ProofConfiguration:
    """
    Points of the extremal construction at parameter a and s = h(a).

    After normalizing, p = (1, 0) and the supporting lines are x = +-1;
    q2 = (1/s, -a), q3 = (-1/s, -1), d1 is where the lines through
    {p, q2} and {-p, q3} meet, q1 = -gamma d1, and [d2, d3] is the chord
    through q1 parallel to [q2, q3] between x = -1 and x = 1.
    """

    a: Scalar
    s: Scalar
    gamma: Scalar
    lam: Scalar
    p: Point2
    q1: Point2
    q2: Point2
    q3: Point2
    d1: Point2
    d2: Point2
    d3: Point2
    field: Field

    def memberships(self) -> dict[str, bool]:
        """The three memberships of a valid situation."""
        s = self.s
        field = self.field
        return {
            "-s*q1 in conv(q2, q3, d1)": _in_triangle(
                self.q1 * (-s), (self.q2, self.q3, self.d1), field
            ),
            "-s*q3 in conv(p, q1, d3)": _in_triangle(
                self.q3 * (-s), (self.p, self.q1, self.d3), field
            ),
            "-s*q2 in conv(-p, q1, d2)": _in_triangle(
                self.q2 * (-s), (-self.p, self.q1, self.d2), field
            ),
        }

    def tight(self) -> bool:
        """Whether s * gamma reaches 1, i.e. -s q1 = d1."""
        return self.field.equal(self.s * self.gamma, self.field.one)

    def is_valid(self) -> bool:
        field = self.field
        return (
            all(self.memberships().values())
            and field.compare(self.s * self.gamma, field.one) <= 0
        )

    def body(self) -> ConvexPolygon:
        """The extremal body conv{-d1/s, +-p/s, q2, q3}."""
        s = self.s
        return convex_hull(
            [
                self.d1 * (-1 / s),
                self.p / s,
                -self.p / s,
                self.q2,
                self.q3,
            ],
            self.field,
        )


def proof_configuration(
    a: Any,
    field: Field | None = None,
) -> ProofConfiguration:
    """
    Materialize the extremal construction at a with s = h(a).

    The exact backend is used whenever h(a) lies in Q(sqrt 5); otherwise
    the computation falls back to floats.

    Raises:
        DomainError: If a is outside (0, 1]
    """
    if field is None:
        if isinstance(a, float):
            field = FloatField()
        else:
            try:
                h_of_a(a, EXACT)
                field = EXACT
            except NotRepresentableError:
                logger.debug("h(%s) is irrational over Q(sqrt 5)", a)
                field = FloatField()
                a = float(EXACT.coerce(a))
    a = _check_a(a, field)
    s = h_of_a(a, field)
    g = gamma(s, a, field)
    one = field.one
    zero = field.zero

    p = Point2(one, zero)
    q2 = Point2(one / s, -a)
    q3 = Point2(-one / s, -one)
    d1 = Point2((a - 1) / (a + 1), -2 * a / ((1 - one / s) * (a + 1)))
    q1 = d1 * (-g)
    lam = (1 + q1.x) / 2

    # chord through q1 parallel to q3 - q2, clipped to x = -1 and x = 1
    direction = q3 - q2
    d2 = q1 + direction * ((-one - q1.x) / direction.x)
    d3 = q1 + direction * ((one - q1.x) / direction.x)

    return ProofConfiguration(
        a=a,
        s=s,
        gamma=g,
        lam=lam,
        p=p,
        q1=q1,
        q2=q2,
        q3=q3,
        d1=d1,
        d2=d2,
        d3=d3,
        field=field,
    )
