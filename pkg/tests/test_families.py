from __future__ import annotations

import math
import unittest
from fractions import Fraction

import numpy as np

from django_convexmeans.exceptions import DegenerateGeometryError
from django_convexmeans.exceptions import DomainError
from django_convexmeans.geometry.polygon import Point2
from django_convexmeans.geometry.scalar import PHI
from django_convexmeans.golden.conditions import condition_iii
from django_convexmeans.golden.families import HouseParams
from django_convexmeans.golden.families import hexagon_family
from django_convexmeans.golden.families import hexagon_family_member
from django_convexmeans.golden.families import midpoint_deviation
from django_convexmeans.golden.families import random_house
from django_convexmeans.golden.families import random_polygon
from django_convexmeans.golden.families import regular_ngon
from django_convexmeans.golden.house import golden_house
from django_convexmeans.optimize.containment import is_minkowski_centered

PHI_FLOAT = (1 + math.sqrt(5)) / 2


class TestHexagonFamily(unittest.TestCase):
    def test_start_is_the_golden_house(self):
        member = hexagon_family_member(1)
        self.assertEqual(member.s, PHI)
        self.assertEqual(member.polygon, golden_house())
        self.assertEqual(member.translation, Point2(0, 0))

    def test_end_is_symmetric(self):
        member = hexagon_family_member(PHI * PHI)
        self.assertEqual(member.s, 1)
        self.assertEqual(len(member.polygon), 6)
        self.assertEqual(member.translation, Point2(0, Fraction(1, 2)))

    def test_members_are_centered(self):
        for tau in (Fraction(3, 2), 2):
            with self.subTest(tau=tau):
                self.assertTrue(is_minkowski_centered(hexagon_family(tau)))

    def test_asymmetry_decreases_along_the_family(self):
        taus = np.linspace(1.0, PHI_FLOAT**2, 9)
        values = [float(hexagon_family_member(float(t)).s) for t in taus]
        self.assertAlmostEqual(values[0], PHI_FLOAT)
        self.assertAlmostEqual(values[-1], 1.0)
        for previous, current in zip(values, values[1:]):
            self.assertLessEqual(current, previous + 1e-9)

    def test_condition_iii_holds_throughout(self):
        for tau in np.linspace(1.0, PHI_FLOAT**2, 9):
            with self.subTest(tau=float(tau)):
                member = hexagon_family_member(float(tau))
                self.assertIsNotNone(condition_iii(member.polygon))

    def test_domain(self):
        for tau in (Fraction(1, 2), 3, 0.99):
            with self.subTest(tau=tau):
                with self.assertRaises(DomainError):
                    hexagon_family_member(tau)


class TestRegularPolygons(unittest.TestCase):
    def test_vertex_on_top(self):
        P = regular_ngon(5)
        self.assertEqual(len(P), 5)
        top = max(P.vertices, key=lambda v: v.y)
        self.assertAlmostEqual(top.x, 0.0)
        self.assertAlmostEqual(top.y, 1.0)

    def test_domain(self):
        for n in (2, 0, 4.0):
            with self.subTest(n=n):
                with self.assertRaises(DomainError):
                    regular_ngon(n)

    def test_odd_polygons_touch_edge_midpoints(self):
        for n in (5, 7, 9):
            with self.subTest(n=n):
                s = 1 / math.cos(math.pi / n)
                self.assertLess(midpoint_deviation(regular_ngon(n), s), 1e-9)

    def test_wrong_factor_misses_midpoints(self):
        self.assertGreater(midpoint_deviation(regular_ngon(5), 1.0), 0.1)


class TestRandomGenerators(unittest.TestCase):
    def test_random_polygon_is_reproducible(self):
        first = random_polygon(np.random.default_rng(7))
        second = random_polygon(np.random.default_rng(7))
        self.assertEqual(first, second)
        self.assertGreaterEqual(len(first), 5)
        self.assertFalse(first.field.exact)

    def test_random_polygon_lies_in_annulus_hull(self):
        P = random_polygon(np.random.default_rng(11), (3, 6), 3)
        for vertex in P.vertices:
            radius = math.hypot(vertex.x, vertex.y)
            self.assertGreaterEqual(radius, 0.5 - 1e-12)
            self.assertLessEqual(radius, 1.0 + 1e-12)

    def test_random_houses_are_valid(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            params = random_house(rng)
            self.assertTrue(params.is_valid())
            self.assertGreaterEqual(len(params.polygon()), 4)


class TestHouseParams(unittest.TestCase):
    def test_invalid_parameters(self):
        params = HouseParams(lower=0.0, upper=-1.0, apex=1.0, base=-1.0)
        self.assertFalse(params.is_valid())
        with self.assertRaises(DegenerateGeometryError):
            params.polygon()
