from __future__ import annotations

import unittest
from fractions import Fraction

from hypothesis import assume
from hypothesis import given
from hypothesis import strategies as st

from django_convexmeans.exceptions import DegenerateGeometryError
from django_convexmeans.exceptions import NotMinkowskiCenteredError
from django_convexmeans.exceptions import OriginNotInteriorError
from django_convexmeans.geometry.means import mean_max
from django_convexmeans.geometry.means import mean_min
from django_convexmeans.geometry.polygon import ConvexPolygon
from django_convexmeans.geometry.polygon import Location
from django_convexmeans.geometry.polygon import Point2
from django_convexmeans.geometry.polygon import contains_origin_in_interior
from django_convexmeans.geometry.polygon import contains_point
from django_convexmeans.geometry.polygon import convex_hull
from django_convexmeans.geometry.polygon import negate
from django_convexmeans.geometry.polygon import support_value
from django_convexmeans.geometry.polygon import translate
from django_convexmeans.geometry.scalar import EXACT
from django_convexmeans.geometry.scalar import FloatField
from django_convexmeans.golden.conditions import condition_iii
from django_convexmeans.golden.conditions import equivalence_report
from django_convexmeans.golden.families import regular_ngon
from django_convexmeans.golden.house import golden_house

SQUARE = ConvexPolygon([(-1, -1), (1, -1), (1, 1), (-1, 1)])
TRIANGLE = ConvexPolygon([(1, 0), (0, 1), (-1, -1)])

lattice_points = st.lists(
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
    min_size=3,
    max_size=7,
)


def _body_around_origin(points):
    try:
        C = convex_hull(points)
    except DegenerateGeometryError:
        assume(False)
    assume(contains_origin_in_interior(C))
    return C


def _touches_hull_of_union(C):
    # some vertex of C and -C in common lies on the boundary of their hull
    hull = mean_max(C, negate(C))
    return any(
        contains_point(hull, v) is Location.BOUNDARY
        for v in mean_min(C, negate(C)).vertices
    )


class TestConditionIII(unittest.TestCase):
    def test_golden_house_witness(self):
        witness = condition_iii(golden_house())
        self.assertIsNotNone(witness)
        self.assertEqual(witness.p, Point2(1, 0))
        self.assertEqual(witness.a, Point2(1, 0))
        self.assertEqual(witness.rho, 1)

    def test_witness_supports_both_sides(self):
        C = golden_house()
        witness = condition_iii(C)
        self.assertEqual(support_value(C, witness.a), witness.rho)
        self.assertEqual(support_value(C, -witness.a), witness.rho)
        self.assertEqual(witness.a.dot(witness.p), witness.rho)

    def test_witness_json(self):
        witness = condition_iii(golden_house())
        self.assertEqual(
            witness.to_json(EXACT),
            {
                "p": ["1/1+0/1*r5", "0/1+0/1*r5"],
                "a": ["1/1+0/1*r5", "0/1+0/1*r5"],
                "rho": "1/1+0/1*r5",
            },
        )

    def test_float_witness_is_normalized(self):
        witness = condition_iii(golden_house(FloatField(1e-9)))
        self.assertIsNotNone(witness)
        self.assertAlmostEqual(witness.a.x**2 + witness.a.y**2, 1.0)
        self.assertAlmostEqual(witness.rho, 1.0)

    def test_triangle_has_no_witness(self):
        self.assertIsNone(condition_iii(TRIANGLE))

    def test_regular_pentagon_has_no_witness(self):
        self.assertIsNone(condition_iii(regular_ngon(5)))

    def test_symmetric_body_has_witness(self):
        self.assertIsNotNone(condition_iii(SQUARE))

    def test_origin_on_boundary_rejected(self):
        with self.assertRaises(OriginNotInteriorError):
            condition_iii(translate(SQUARE, (1, 0)))


class TestEquivalenceReport(unittest.TestCase):
    def test_golden_house_satisfies_all(self):
        report = equivalence_report(golden_house())
        self.assertTrue(report.cond_i)
        self.assertTrue(report.cond_ii)
        self.assertTrue(report.cond_iii)
        self.assertTrue(report.consistent)
        self.assertEqual(report.rho_i, 1)
        self.assertEqual(report.rho_ii, 1)

    def test_triangle_satisfies_none(self):
        report = equivalence_report(TRIANGLE)
        self.assertEqual(
            (report.cond_i, report.cond_ii, report.cond_iii),
            (False, False, False),
        )
        self.assertEqual(report.rho_i, Fraction(2, 3))
        self.assertEqual(report.rho_ii, Fraction(8, 9))

    def test_regular_odd_polygons_satisfy_none(self):
        for n in (5, 7):
            with self.subTest(n=n):
                report = equivalence_report(regular_ngon(n))
                self.assertFalse(report.cond_i)
                self.assertFalse(report.cond_ii)
                self.assertFalse(report.cond_iii)
                self.assertTrue(report.consistent)

    def test_symmetric_body_satisfies_all(self):
        report = equivalence_report(SQUARE)
        self.assertTrue(report.cond_i and report.cond_ii and report.cond_iii)

    def test_to_json(self):
        document = equivalence_report(golden_house()).to_json(EXACT)
        self.assertEqual(
            set(document),
            {"cond_i", "cond_ii", "cond_iii", "rho_i", "rho_ii", "witness"},
        )
        self.assertEqual(document["rho_ii"], "1/1+0/1*r5")
        self.assertIsNotNone(document["witness"])

    def test_uncentered_body_rejected(self):
        with self.assertRaises(NotMinkowskiCenteredError):
            equivalence_report(translate(golden_house(), (0, Fraction(1, 2))))


class TestConditionIIIAgainstBoundaryContact(unittest.TestCase):
    @given(lattice_points)
    def test_agrees_on_random_bodies(self, points):
        C = _body_around_origin(points)
        self.assertEqual(
            condition_iii(C) is not None, _touches_hull_of_union(C)
        )

    @given(lattice_points)
    def test_agrees_on_bodies_with_an_antipodal_pair(self, points):
        x, y = points[0]
        C = _body_around_origin(points + [(-x, -y)])
        self.assertEqual(
            condition_iii(C) is not None, _touches_hull_of_union(C)
        )

    @given(lattice_points)
    def test_witness_is_in_both_bodies(self, points):
        C = _body_around_origin(points)
        witness = condition_iii(C)
        assume(witness is not None)
        self.assertIsNot(contains_point(C, witness.p), Location.OUTSIDE)
        self.assertIsNot(contains_point(C, -witness.p), Location.OUTSIDE)
