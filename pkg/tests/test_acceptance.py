from __future__ import annotations

import math
import random
import unittest
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from django_convexmeans.exceptions import DegenerateGeometryError
from django_convexmeans.geometry.means import minkowski_sum
from django_convexmeans.geometry.polygon import Point2
from django_convexmeans.geometry.polygon import convex_hull
from django_convexmeans.geometry.polygon import negate
from django_convexmeans.golden.conditions import equivalence_report
from django_convexmeans.golden.families import hexagon_family_member
from django_convexmeans.golden.families import random_polygon
from django_convexmeans.golden.house import h_of_a
from django_convexmeans.golden.search import SOURCE_HILL_CLIMB
from django_convexmeans.golden.search import threshold_search
from django_convexmeans.matrices import harm_arith_matrix_gap
from django_convexmeans.matrices import random_spd
from django_convexmeans.matrices import run_matrix_trials
from django_convexmeans.optimize.containment import minkowski_asymmetry

PHI = (1 + math.sqrt(5)) / 2

SEARCH_ITERATIONS = 1000
HILL_CLIMBS = 100
ORACLE_POLYGONS = 200
SUM_PAIRS = 200
MATRIX_PAIRS = {2: 167, 3: 167, 5: 166}
HEXAGON_GRID = 50
THRESHOLD_GRID = 1000


def _translation_feasible(P, rho):
    """Whether P lies in t - rho P for some t."""
    rows = []
    rhs = []
    for plane in negate(P).halfplanes():
        a = (float(plane.a.x), float(plane.a.y))
        for v in P.vertices:
            rows.append([-a[0], -a[1]])
            rhs.append(rho * float(plane.rho) - (a[0] * v.x + a[1] * v.y))
    result = linprog(
        [0.0, 0.0],
        A_ub=rows,
        b_ub=rhs,
        bounds=[(None, None)] * 2,
        method="highs",
        options={"primal_feasibility_tolerance": 1e-10},
    )
    return result.status == 0


def _asymmetry_by_bisection(P, steps=40):
    low, high = 1.0, 2.0
    for _ in range(steps):
        middle = (low + high) / 2
        if _translation_feasible(P, middle):
            high = middle
        else:
            low = middle
    return high


def _random_rational_polygon(rng):
    points = [
        Point2(
            Fraction(rng.randint(-20, 20), rng.randint(1, 4)),
            Fraction(rng.randint(-20, 20), rng.randint(1, 4)),
        )
        for _ in range(rng.randint(3, 8))
    ]
    return convex_hull(points)


@pytest.mark.slow
class TestSearchSweep(unittest.TestCase):
    """Equivalence and threshold over a seeded search sample."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.outcome = threshold_search(
            seed=0,
            iterations=SEARCH_ITERATIONS,
            require_condition=False,
            hill_climbs=HILL_CLIMBS,
        )

    def test_conditions_agree(self):
        for record in self.outcome.records:
            report = equivalence_report(record.polygon)
            self.assertTrue(report.consistent, record.to_json())

    def test_threshold(self):
        for record in self.outcome.records:
            if record.witness is not None:
                self.assertLessEqual(record.s, PHI + 1e-7)

    def test_hill_climbs_reach_phi(self):
        climbed = [
            record.s
            for record in self.outcome.records
            if record.source == SOURCE_HILL_CLIMB
        ]
        self.assertEqual(len(climbed), HILL_CLIMBS)
        self.assertGreaterEqual(max(climbed), PHI - 1e-4)


@pytest.mark.slow
class TestOracles(unittest.TestCase):
    def test_asymmetry_matches_bisection(self):
        rng = np.random.default_rng(2024)
        for _ in range(ORACLE_POLYGONS):
            P = random_polygon(rng, min_vertices=3)
            expected = _asymmetry_by_bisection(P)
            self.assertAlmostEqual(
                minkowski_asymmetry(P).s, expected, delta=1e-9
            )

    def test_minkowski_sum_matches_pairwise_hull(self):
        rng = random.Random(2024)
        checked = 0
        while checked < SUM_PAIRS:
            try:
                P = _random_rational_polygon(rng)
                Q = _random_rational_polygon(rng)
            except DegenerateGeometryError:
                continue
            sums = [p + q for p in P.vertices for q in Q.vertices]
            self.assertEqual(minkowski_sum(P, Q), convex_hull(sums))
            checked += 1


@pytest.mark.slow
class TestGrids(unittest.TestCase):
    def test_hexagon_family_grid(self):
        taus = np.linspace(1.0, PHI**2, HEXAGON_GRID)
        members = [hexagon_family_member(float(t)) for t in taus]
        values = [float(member.s) for member in members]
        self.assertAlmostEqual(values[0], PHI, delta=1e-9)
        self.assertAlmostEqual(values[-1], 1.0, delta=1e-9)
        for previous, current in zip(values, values[1:]):
            self.assertLessEqual(current, previous + 1e-9)
        for member in members:
            self.assertTrue(equivalence_report(member.polygon).cond_iii)

    def test_threshold_function_grid(self):
        grid = np.linspace(1.0 / THRESHOLD_GRID, 1.0, THRESHOLD_GRID)
        values = [h_of_a(float(a)) for a in grid]
        for lower, upper in zip(values, values[1:]):
            self.assertLess(lower, upper)


@pytest.mark.slow
class TestMatrixSweep(unittest.TestCase):
    def test_inequalities(self):
        for n, trials in MATRIX_PAIRS.items():
            with self.subTest(n=n):
                summary = run_matrix_trials(n, seed=n, trials=trials)
                self.assertTrue(summary["passed"], summary)

    def test_gap_is_strict(self):
        rng = np.random.default_rng(500)
        for n, trials in MATRIX_PAIRS.items():
            for _ in range(trials):
                A = random_spd(rng, n)
                B = random_spd(rng, n)
                if np.linalg.norm(A.array - B.array) <= 1e-6:
                    continue
                for lam in np.linspace(0.1, 0.9, 9):
                    gap = harm_arith_matrix_gap(A, B, float(lam))
                    self.assertGreater(np.linalg.eigvalsh(gap)[0], 1e-12)
