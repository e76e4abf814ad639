from __future__ import annotations

import unittest
from fractions import Fraction

from hypothesis import assume
from hypothesis import given
from hypothesis import strategies as st

from django_convexmeans.exceptions import DegenerateGeometryError
from django_convexmeans.exceptions import DomainError
from django_convexmeans.exceptions import OriginNotInteriorError
from django_convexmeans.geometry.means import intersect
from django_convexmeans.geometry.means import mean_arith
from django_convexmeans.geometry.means import mean_harm
from django_convexmeans.geometry.means import mean_max
from django_convexmeans.geometry.means import mean_min
from django_convexmeans.geometry.means import means_chain
from django_convexmeans.geometry.means import minkowski_sum
from django_convexmeans.geometry.means import polar
from django_convexmeans.geometry.polygon import ConvexPolygon
from django_convexmeans.geometry.polygon import Point2
from django_convexmeans.geometry.polygon import contains_origin_in_interior
from django_convexmeans.geometry.polygon import convex_hull
from django_convexmeans.geometry.polygon import is_subset
from django_convexmeans.geometry.polygon import is_symmetric
from django_convexmeans.geometry.polygon import negate
from django_convexmeans.geometry.polygon import scale
from django_convexmeans.geometry.polygon import transform
from django_convexmeans.geometry.polygon import translate
from django_convexmeans.geometry.scalar import FloatField
from django_convexmeans.golden.house import golden_house

SQUARE = ConvexPolygon([(-1, -1), (1, -1), (1, 1), (-1, 1)])
DIAMOND = ConvexPolygon([(1, 0), (0, 1), (-1, 0), (0, -1)])
# vertex centroid at the origin
TRIANGLE = ConvexPolygon([(1, 0), (0, 1), (-1, -1)])

lattice_points = st.lists(
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
    min_size=3,
    max_size=8,
)


def _hull_or_skip(points):
    try:
        return convex_hull(points)
    except DegenerateGeometryError:
        assume(False)


linear_maps = st.tuples(
    st.integers(-3, 3),
    st.integers(-3, 3),
    st.integers(-3, 3),
    st.integers(-3, 3),
).filter(lambda m: m[0] * m[3] - m[1] * m[2] != 0)


def _body_around_origin(points):
    body = _hull_or_skip(points)
    assume(contains_origin_in_interior(body))
    return body


def _matrix(entries):
    a, b, c, d = entries
    return ((a, b), (c, d))


class TestMinkowskiSum(unittest.TestCase):
    def test_square_plus_square(self):
        self.assertEqual(minkowski_sum(SQUARE, SQUARE), scale(SQUARE, 2))

    def test_triangle_difference_body(self):
        hexagon = minkowski_sum(TRIANGLE, negate(TRIANGLE))
        self.assertEqual(len(hexagon), 6)
        self.assertEqual(is_symmetric(hexagon), Point2(0, 0))

    def test_point_translates(self):
        self.assertEqual(
            minkowski_sum(SQUARE, Point2(1, 2)), translate(SQUARE, (1, 2))
        )

    def test_mixed_backends_fall_back_to_floats(self):
        total = minkowski_sum(SQUARE, DIAMOND.with_field(FloatField(1e-9)))
        self.assertFalse(total.field.exact)
        self.assertEqual(len(total), 8)

    @given(lattice_points, lattice_points)
    def test_matches_hull_of_pairwise_sums(self, first, second):
        P = _hull_or_skip(first)
        Q = _hull_or_skip(second)
        oracle = convex_hull([p + q for p in P.vertices for q in Q.vertices])
        self.assertEqual(minkowski_sum(P, Q), oracle)


class TestIntersect(unittest.TestCase):
    def test_overlapping_squares(self):
        shifted = translate(SQUARE, (1, 1))
        self.assertEqual(
            intersect(SQUARE, shifted),
            ConvexPolygon([(0, 0), (1, 0), (1, 1), (0, 1)]),
        )

    def test_disjoint_bodies(self):
        with self.assertRaises(DegenerateGeometryError):
            intersect(SQUARE, translate(SQUARE, (3, 0)))

    def test_bodies_sharing_an_edge(self):
        with self.assertRaises(DegenerateGeometryError):
            intersect(SQUARE, translate(SQUARE, (2, 0)))

    @given(lattice_points, lattice_points)
    def test_result_lies_in_both(self, first, second):
        P = _hull_or_skip(first)
        Q = _hull_or_skip(second)
        try:
            meet = intersect(P, Q)
        except DegenerateGeometryError:
            return
        self.assertTrue(is_subset(meet, P))
        self.assertTrue(is_subset(meet, Q))


class TestPolar(unittest.TestCase):
    def test_square_and_diamond_are_dual(self):
        self.assertEqual(polar(SQUARE), DIAMOND)
        self.assertEqual(polar(DIAMOND), SQUARE)

    def test_triangle_polar(self):
        self.assertEqual(
            polar(TRIANGLE), ConvexPolygon([(1, 1), (-2, 1), (1, -2)])
        )

    def test_polar_is_an_involution(self):
        self.assertEqual(polar(polar(TRIANGLE)), TRIANGLE)
        house = golden_house()
        self.assertEqual(polar(polar(house)), house)

    def test_origin_on_boundary_rejected(self):
        corner = ConvexPolygon([(0, 0), (1, 0), (0, 1)])
        with self.assertRaises(OriginNotInteriorError):
            polar(corner)


class TestWeightedMeans(unittest.TestCase):
    def test_arithmetic_of_homothets(self):
        self.assertEqual(
            mean_arith(SQUARE, scale(SQUARE, 3)), scale(SQUARE, 2)
        )

    def test_harmonic_of_homothets(self):
        self.assertEqual(
            mean_harm(SQUARE, scale(SQUARE, 3)),
            scale(SQUARE, Fraction(3, 2)),
        )

    def test_endpoint_weights(self):
        self.assertEqual(mean_arith(SQUARE, DIAMOND, 0), SQUARE)
        self.assertEqual(mean_arith(SQUARE, DIAMOND, 1), DIAMOND)
        self.assertEqual(mean_harm(SQUARE, DIAMOND, 0), SQUARE)

    def test_weight_outside_unit_interval(self):
        for weight in (-1, 2, Fraction(3, 2)):
            with self.subTest(weight=weight):
                with self.assertRaises(DomainError):
                    mean_arith(SQUARE, DIAMOND, weight)

    def test_min_and_max(self):
        big_diamond = scale(DIAMOND, 2)
        self.assertEqual(mean_min(SQUARE, big_diamond), SQUARE)
        self.assertEqual(mean_max(SQUARE, big_diamond), big_diamond)


class TestMeansChain(unittest.TestCase):
    def test_triangle_chain(self):
        chain = means_chain(TRIANGLE)
        self.assertTrue(chain.inclusions_hold())
        self.assertEqual(len(chain.minimum), 6)
        self.assertEqual(len(chain.maximum), 6)
        self.assertEqual(
            chain.arithmetic,
            scale(minkowski_sum(TRIANGLE, negate(TRIANGLE)), Fraction(1, 2)),
        )
        for name, body in chain.layers():
            with self.subTest(layer=name):
                self.assertEqual(is_symmetric(body), Point2(0, 0))

    def test_symmetric_body_is_its_own_chain(self):
        chain = means_chain(SQUARE)
        for name, body in chain.layers():
            with self.subTest(layer=name):
                self.assertEqual(body, SQUARE)

    def test_golden_house_chain_in_floats(self):
        chain = means_chain(golden_house(FloatField(1e-9)))
        self.assertTrue(chain.inclusions_hold())

    def test_layer_order(self):
        names = [name for name, _ in means_chain(TRIANGLE).layers()]
        self.assertEqual(
            names, ["minimum", "harmonic", "arithmetic", "maximum"]
        )

    def test_origin_outside_rejected(self):
        with self.assertRaises(OriginNotInteriorError):
            means_chain(translate(TRIANGLE, (5, 5)))


class TestMeanProperties(unittest.TestCase):
    @given(lattice_points, linear_maps)
    def test_means_commute_with_linear_maps(self, points, entries):
        C = _body_around_origin(points)
        L = _matrix(entries)
        chain = means_chain(C)
        mapped = means_chain(transform(C, L))
        for (name, body), (_, image) in zip(chain.layers(), mapped.layers()):
            with self.subTest(mean=name):
                self.assertEqual(transform(body, L), image)

    @given(lattice_points, lattice_points, linear_maps)
    def test_pair_means_commute_with_linear_maps(self, first, second, entries):
        K = _body_around_origin(first)
        C = _body_around_origin(second)
        L = _matrix(entries)
        for mean in (mean_min, mean_harm, mean_arith, mean_max):
            with self.subTest(mean=mean.__name__):
                self.assertEqual(
                    transform(mean(K, C), L),
                    mean(transform(K, L), transform(C, L)),
                )

    @given(lattice_points, lattice_points)
    def test_chain_of_random_pairs(self, first, second):
        K = _body_around_origin(first)
        C = _body_around_origin(second)
        chain = [
            mean_min(K, C),
            mean_harm(K, C),
            mean_arith(K, C),
            mean_max(K, C),
        ]
        for inner, outer in zip(chain, chain[1:]):
            self.assertTrue(is_subset(inner, outer))

    @given(
        lattice_points,
        st.fractions(
            min_value=Fraction(1, 10),
            max_value=Fraction(9, 10),
            max_denominator=20,
        ),
    )
    def test_weighted_chain(self, points, weight):
        C = _body_around_origin(points)
        reflected = negate(C)
        harmonic = mean_harm(C, reflected, weight)
        arithmetic = mean_arith(C, reflected, weight)
        self.assertTrue(is_subset(mean_min(C, reflected), harmonic))
        self.assertTrue(is_subset(harmonic, arithmetic))
        self.assertTrue(is_subset(arithmetic, mean_max(C, reflected)))
