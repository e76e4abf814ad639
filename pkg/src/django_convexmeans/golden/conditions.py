from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any

from django_convexmeans.exceptions import NotMinkowskiCenteredError
from django_convexmeans.exceptions import OriginNotInteriorError
from django_convexmeans.geometry.means import means_chain
from django_convexmeans.geometry.polygon import ConvexPolygon
from django_convexmeans.geometry.polygon import Point2
from django_convexmeans.geometry.polygon import contains_origin_in_interior
from django_convexmeans.geometry.polygon import negate
from django_convexmeans.geometry.polygon import support
from django_convexmeans.geometry.scalar import Field
from django_convexmeans.geometry.scalar import Scalar
from django_convexmeans.optimize.containment import is_minkowski_centered
from django_convexmeans.optimize.containment import is_opt_contained

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SupportWitness:
    """
    Antipodal parallel supports: a.p = rho = h_C(a) = h_C(-a), -p in C.
    """

    p: Point2
    a: Point2
    rho: Scalar

    def to_json(self, field: Field) -> dict[str, Any]:
        return {
            "p": [field.to_json(self.p.x), field.to_json(self.p.y)],
            "a": [field.to_json(self.a.x), field.to_json(self.a.y)],
            "rho": field.to_json(self.rho),
        }


def _overlap_point(
    face: list[Point2],
    mirrored: list[Point2],
    direction: Point2,
    field: Field,
) -> Point2 | None:
    """A point common to two collinear faces, or None if disjoint."""
    along = Point2(-direction.y, direction.x)

    def interval(points: list[Point2]) -> tuple[Scalar, Scalar]:
        values = [along.dot(p) for p in points]
        low, high = values[0], values[0]
        for value in values[1:]:
            if field.compare(value, low) < 0:
                low = value
            if field.compare(value, high) > 0:
                high = value
        return low, high

    low_f, high_f = interval(face)
    low_m, high_m = interval(mirrored)
    for candidate in face + mirrored:
        t = along.dot(candidate)
        if (
            field.compare(low_f, t) <= 0
            and field.compare(t, high_f) <= 0
            and field.compare(low_m, t) <= 0
            and field.compare(t, high_m) <= 0
        ):
            return candidate
    return None


def condition_iii(C: ConvexPolygon) -> SupportWitness | None:
    """
    Search for parallel supporting lines {a.x = rho} and {-a.x = rho}
    touching C at points p and -p.

    For polygons it suffices to try the edge normals of C and of -C:
    equal support values at a direction whose faces are both vertices
    persist up to the neighbouring edge normals. The first witness in
    that order is returned.

    Raises:
        OriginNotInteriorError: If 0 is not an interior point of C
    """
    if not contains_origin_in_interior(C):
        raise OriginNotInteriorError("Condition checks need 0 in interior")
    field = C.field
    directions = [h.a for h in C.halfplanes()]
    directions += [h.a for h in negate(C).halfplanes()]
    for a in directions:
        rho, face = support(C, a)
        rho_opposite, opposite = support(C, -a)
        if not field.equal(rho, rho_opposite):
            continue
        p = _overlap_point(face, [-v for v in opposite], a, field)
        if p is None:
            continue
        if not field.exact:
            length = math.hypot(*a.to_float())
            a = Point2(*field.unit((a.x, a.y)))
            rho = rho / length
        logger.debug("Condition (iii) witness p=%s a=%s rho=%s", p, a, rho)
        return SupportWitness(p=p, a=a, rho=rho)
    return None


@dataclass(frozen=True)
class EquivalenceReport:
    """
    The three optimality conditions for a Minkowski centered body C.

    cond_i: C meet -C optimally contained in conv(C union -C)
    cond_ii: harmonic mean optimally contained in arithmetic mean
    cond_iii: antipodal parallel supports exist
    """

    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    witness: SupportWitness | None
    rho_i: Scalar
    rho_ii: Scalar

    @property
    def consistent(self) -> bool:
        return self.cond_i == self.cond_ii == self.cond_iii

    def to_json(self, field: Field) -> dict[str, Any]:
        return {
            "cond_i": self.cond_i,
            "cond_ii": self.cond_ii,
            "cond_iii": self.cond_iii,
            "rho_i": field.to_json(self.rho_i),
            "rho_ii": field.to_json(self.rho_ii),
            "witness": (
                self.witness.to_json(field) if self.witness else None
            ),
        }


def equivalence_report(C: ConvexPolygon) -> EquivalenceReport:
    """
    Evaluate all three optimality conditions.

    Raises:
        OriginNotInteriorError: If 0 is not an interior point of C
        NotMinkowskiCenteredError: If 0 is not a Minkowski center of C
    """
    if not contains_origin_in_interior(C):
        raise OriginNotInteriorError("Condition checks need 0 in interior")
    if not is_minkowski_centered(C):
        raise NotMinkowskiCenteredError("Body is not Minkowski centered")

    chain = means_chain(C)
    cond_i, result_i = is_opt_contained(chain.minimum, chain.maximum)
    cond_ii, result_ii = is_opt_contained(chain.harmonic, chain.arithmetic)
    witness = condition_iii(C)
    report = EquivalenceReport(
        cond_i=cond_i,
        cond_ii=cond_ii,
        cond_iii=witness is not None,
        witness=witness,
        rho_i=result_i.rho,
        rho_ii=result_ii.rho,
    )
    if not report.consistent:
        logger.warning(
            "Optimality conditions disagree: (%s, %s, %s)",
            cond_i,
            cond_ii,
            report.cond_iii,
        )
    return report
