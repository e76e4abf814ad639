from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from django_convexmeans.exceptions import DomainError
from django_convexmeans.geometry.means import mean_arith
from django_convexmeans.geometry.means import mean_harm
from django_convexmeans.geometry.polygon import ConvexPolygon
from django_convexmeans.geometry.polygon import Point2
from django_convexmeans.geometry.polygon import support_value
from django_convexmeans.geometry.scalar import FloatField

logger = logging.getLogger(__name__)

# Smallest admissible eigenvalue of a positive definite matrix
SPD_THRESHOLD = 1e-10

ELLIPSE_SIDES = 512
ELLIPSE_TOLERANCE = 1e-2


class SPDMatrix:
    """
    A symmetric positive definite matrix.

    Input is symmetrized as (M + M^T) / 2 after checking it is symmetric
    to 1e-12; eigenvalues are cached in descending order.

    Raises:
        DomainError: If the matrix is not square, not symmetric or has an
            eigenvalue below ``SPD_THRESHOLD``
    """

    def __init__(self, values: Any) -> None:
        matrix = np.array(values, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DomainError("Matrix must be square", "matrix", values)
        if not np.allclose(matrix, matrix.T, rtol=0.0, atol=1e-12):
            raise DomainError("Matrix must be symmetric", "matrix", values)
        matrix = (matrix + matrix.T) / 2
        eigenvalues = np.linalg.eigvalsh(matrix)[::-1]
        if eigenvalues[-1] <= SPD_THRESHOLD:
            raise DomainError(
                "Matrix is not positive definite "
                f"(smallest eigenvalue {eigenvalues[-1]:.3g})",
                "matrix",
                values,
            )
        self.array = matrix
        self.eigenvalues = eigenvalues

    @property
    def n(self) -> int:
        return int(self.array.shape[0])

    def inverse(self) -> SPDMatrix:
        return SPDMatrix(np.linalg.inv(self.array))

    def det(self) -> float:
        return float(np.prod(self.eigenvalues))

    def k_product(self, k: int) -> float:
        """Product of the k greatest eigenvalues."""
        if not 1 <= k <= self.n:
            raise DomainError(f"k must lie in [1, {self.n}], got {k}", "k", k)
        return float(np.prod(self.eigenvalues[:k]))

    def __repr__(self) -> str:
        return f"SPDMatrix({self.array.tolist()})"


def _spd(value: Any) -> SPDMatrix:
    return value if isinstance(value, SPDMatrix) else SPDMatrix(value)


def _check_lambda(lam: float) -> float:
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"lambda must lie in [0, 1], got {lam}", "lam", lam)
    return float(lam)


def random_spd(rng: np.random.Generator, n: int) -> SPDMatrix:
    """Random well-conditioned SPD matrix M M^T + I / 2."""
    factor = rng.normal(size=(n, n))
    return SPDMatrix(factor @ factor.T + 0.5 * np.eye(n))


def harm_arith_matrix_gap(A: Any, B: Any, lam: float) -> np.ndarray:
    """
    G = (1 - lam) A + lam B - ((1 - lam) A^-1 + lam B^-1)^-1.

    G is positive semidefinite, and positive definite unless A - B is
    singular or lam is 0 or 1.
    """
    A = _spd(A)
    B = _spd(B)
    lam = _check_lambda(lam)
    arithmetic = (1 - lam) * A.array + lam * B.array
    harmonic = np.linalg.inv(
        (1 - lam) * np.linalg.inv(A.array) + lam * np.linalg.inv(B.array)
    )
    gap = arithmetic - harmonic
    return (gap + gap.T) / 2


@dataclass(frozen=True)
class InequalityCheck:
    """Both sides of an inequality; ``holds`` applies a tolerance."""

    lhs: float
    rhs: float
    direction: str

    def holds(self, tolerance: float = 1e-10) -> bool:
        if self.direction == ">=":
            return self.lhs >= self.rhs - tolerance
        return self.lhs <= self.rhs + tolerance

    def __iter__(self) -> Any:
        yield self.lhs
        yield self.rhs


def bm_determinant_check(
    A: Any,
    B: Any,
    lam: float,
    mixed: bool = False,
) -> InequalityCheck:
    """
    Determinantal Brunn-Minkowski check, lhs >= rhs.

    lhs = ((1 - lam) det A + lam det B)^(1/n), or with ``mixed`` the
    classical det((1 - lam) A + lam B)^(1/n); rhs = det((1 - lam) A)^(1/n)
    + det(lam B)^(1/n).
    """
    A = _spd(A)
    B = _spd(B)
    lam = _check_lambda(lam)
    n = A.n
    if mixed:
        combined = np.linalg.det((1 - lam) * A.array + lam * B.array)
    else:
        combined = (1 - lam) * A.det() + lam * B.det()
    lhs = float(combined) ** (1 / n)
    rhs = ((1 - lam) ** n * A.det()) ** (1 / n) + (lam**n * B.det()) ** (
        1 / n
    )
    return InequalityCheck(lhs, rhs, ">=")


def bohnenblust_k_check(
    A: Any,
    B: Any,
    lam: float,
    k: int,
) -> InequalityCheck:
    """
    Eigenproduct check, lhs <= rhs.

    lhs = |(1 - lam) A^-1 + lam B^-1|_k^(-1/k) and
    rhs = ((1 - lam) |A|_k^(-1/k) + lam |B|_k^(-1/k))^-1, where |M|_k is
    the product of the k greatest eigenvalues of M.

    Raises:
        DomainError: If k is outside [1, n]
    """
    A = _spd(A)
    B = _spd(B)
    lam = _check_lambda(lam)
    mixed = SPDMatrix(
        (1 - lam) * A.inverse().array + lam * B.inverse().array
    )
    lhs = mixed.k_product(k) ** (-1 / k)
    rhs = 1 / (
        (1 - lam) * A.k_product(k) ** (-1 / k)
        + lam * B.k_product(k) ** (-1 / k)
    )
    return InequalityCheck(lhs, rhs, "<=")


def ellipse_polygon(M: Any, sides: int = ELLIPSE_SIDES) -> ConvexPolygon:
    """Inscribed regular-parameter polygon of {x : x^T M^-1 x <= 1}."""
    M = _spd(M)
    if M.n != 2:
        raise DomainError("Ellipses are 2 x 2 only", "matrix", M)
    factor = np.linalg.cholesky(M.array)
    angles = np.linspace(0.0, 2 * math.pi, sides, endpoint=False)
    points = factor @ np.vstack([np.cos(angles), np.sin(angles)])
    return ConvexPolygon(
        [Point2(float(x), float(y)) for x, y in points.T], FloatField()
    )


def ellipse_support(M: Any, u: tuple[float, float]) -> float:
    """Support function sqrt(u^T M u) of the ellipse of M."""
    M = _spd(M)
    vector = np.array(u, dtype=float)
    return math.sqrt(float(vector @ M.array @ vector))


@dataclass(frozen=True)
class EllipseCrosscheck:
    """
    Largest support violation of each inclusion of the chain
    E_harm in harmonic body mean in arithmetic body mean in E_arith.
    """

    harmonic_gap: float
    body_gap: float
    arithmetic_gap: float
    directions: int

    def holds(self, tolerance: float = ELLIPSE_TOLERANCE) -> bool:
        return max(self.harmonic_gap, self.body_gap, self.arithmetic_gap) <= (
            tolerance
        )


def ellipsoid_mean_crosscheck(
    A: Any,
    B: Any,
    lam: float,
    sides: int = ELLIPSE_SIDES,
) -> EllipseCrosscheck:
    """
    Compare matrix means with body means of two planar ellipses.

    The ellipses of the harmonic and arithmetic matrix means bracket the
    harmonic and arithmetic body means of the two ellipses. Bodies are
    approximated by inscribed ``sides``-gons and compared by support
    values on ``sides`` evenly spaced directions.
    """
    A = _spd(A)
    B = _spd(B)
    lam = _check_lambda(lam)
    arithmetic_matrix = (1 - lam) * A.array + lam * B.array
    harmonic_matrix = np.linalg.inv(
        (1 - lam) * A.inverse().array + lam * B.inverse().array
    )

    E_A = ellipse_polygon(A, sides)
    E_B = ellipse_polygon(B, sides)
    body_harmonic = mean_harm(E_A, E_B, lam)
    body_arithmetic = mean_arith(E_A, E_B, lam)

    harmonic_gap = body_gap = arithmetic_gap = -math.inf
    for theta in np.linspace(0.0, 2 * math.pi, sides, endpoint=False):
        u = (float(math.cos(theta)), float(math.sin(theta)))
        h_harm_matrix = ellipse_support(harmonic_matrix, u)
        h_harm = float(support_value(body_harmonic, u))
        h_arith = float(support_value(body_arithmetic, u))
        h_arith_matrix = ellipse_support(arithmetic_matrix, u)
        harmonic_gap = max(harmonic_gap, h_harm_matrix - h_harm)
        body_gap = max(body_gap, h_harm - h_arith)
        arithmetic_gap = max(arithmetic_gap, h_arith - h_arith_matrix)

    report = EllipseCrosscheck(
        harmonic_gap=harmonic_gap,
        body_gap=body_gap,
        arithmetic_gap=arithmetic_gap,
        directions=sides,
    )
    logger.debug("Ellipse cross-check: %s", report)
    return report


def run_matrix_trials(
    n: int,
    seed: int,
    trials: int,
    lambdas: tuple[float, ...] = tuple(i / 10 for i in range(11)),
    tolerance: float = 1e-10,
) -> dict[str, Any]:
    """
    Check all three matrix inequalities on random SPD pairs.

    Returns a summary with failure counts per inequality and the smallest
    gap eigenvalue seen.
    """
    rng = np.random.default_rng(seed)
    failures = {"gap": 0, "determinant": 0, "bohnenblust": 0}
    smallest = math.inf
    for _ in range(trials):
        A = random_spd(rng, n)
        B = random_spd(rng, n)
        for lam in lambdas:
            eigenvalues = np.linalg.eigvalsh(harm_arith_matrix_gap(A, B, lam))
            smallest = min(smallest, float(eigenvalues[0]))
            if eigenvalues[0] < -tolerance:
                failures["gap"] += 1
            if not bm_determinant_check(A, B, lam).holds(tolerance):
                failures["determinant"] += 1
            for k in range(1, n + 1):
                if not bohnenblust_k_check(A, B, lam, k).holds(tolerance):
                    failures["bohnenblust"] += 1
    passed = not any(failures.values())
    logger.info(
        "Matrix trials n=%d seed=%d trials=%d passed=%s",
        n,
        seed,
        trials,
        passed,
    )
    return {
        "n": n,
        "seed": seed,
        "trials": trials,
        "passed": passed,
        "failures": failures,
        "min_gap_eigenvalue": smallest,
    }
