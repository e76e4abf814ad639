from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from typing import Any

from django_convexmeans.exceptions import LPError
from django_convexmeans.exceptions import LPInfeasibleError
from django_convexmeans.exceptions import LPPivotLimitError
from django_convexmeans.exceptions import LPUnboundedError
from django_convexmeans.geometry.scalar import EXACT
from django_convexmeans.geometry.scalar import Field
from django_convexmeans.geometry.scalar import Scalar

logger = logging.getLogger(__name__)

LE = "<="
GE = ">="
EQ = "=="

SENSES = (LE, GE, EQ)


@dataclass(frozen=True)
class Constraint:
    """One row ``coefficients . x  (sense)  rhs``."""

    coefficients: tuple[Scalar, ...]
    sense: str
    rhs: Scalar


@dataclass
class LPProblem:
    """
    A dense linear program ``minimize objective . x``.

    Variables are nonnegative unless their index is listed in ``free``.
    """

    objective: list[Scalar]
    constraints: list[Constraint] = dataclass_field(default_factory=list)
    free: frozenset[int] = frozenset()
    field: Field = EXACT

    @property
    def num_variables(self) -> int:
        return len(self.objective)

    def add(
        self,
        coefficients: Sequence[Any],
        sense: str,
        rhs: Any,
    ) -> int:
        """Append a constraint and return its index."""
        if sense not in SENSES:
            raise LPError(f"Unknown constraint sense: {sense!r}")
        if len(coefficients) != self.num_variables:
            raise LPError(
                f"Constraint has {len(coefficients)} coefficients, "
                f"expected {self.num_variables}"
            )
        self.constraints.append(
            Constraint(
                tuple(self.field.coerce(c) for c in coefficients),
                sense,
                self.field.coerce(rhs),
            )
        )
        return len(self.constraints) - 1


@dataclass(frozen=True)
class LPSolution:
    """
    An optimal basic solution.

    Attributes:
        x: Optimal point in the original variables
        value: Optimal objective value
        basis: Labels of the basic columns, e.g. ``"x0+"``, ``"s3"``
        duals: One multiplier y_i per constraint with
            ``objective = sum_i y_i * row_i + reduced costs``; a ``<=`` row
            of a minimization has y_i <= 0
        pivots: Number of simplex pivots over both phases
    """

    x: tuple[Scalar, ...]
    value: Scalar
    basis: tuple[str, ...]
    duals: tuple[Scalar, ...]
    pivots: int

    def slack(self, problem: LPProblem, index: int) -> Scalar:
        """rhs - row . x for constraint ``index``."""
        row = problem.constraints[index]
        activity = problem.field.zero
        for coefficient, value in zip(row.coefficients, self.x):
            activity = activity + coefficient * value
        return row.rhs - activity

    def is_tight(self, problem: LPProblem, index: int) -> bool:
        return problem.field.is_zero(self.slack(problem, index))


class _Tableau:
    """Dense simplex tableau with Bland's pivot rule."""

    def __init__(self, field: Field, max_pivots: int) -> None:
        self.field = field
        self.max_pivots = max_pivots
        self.rows: list[list[Scalar]] = []
        self.basis: list[int] = []
        self.objective: list[Scalar] = []
        self.pivots = 0

    def pivot(self, row: int, col: int) -> None:
        if self.pivots >= self.max_pivots:
            raise LPPivotLimitError(
                f"Simplex exceeded {self.max_pivots} pivots", self.pivots
            )
        self.pivots += 1
        pivot_row = self.rows[row]
        divisor = pivot_row[col]
        pivot_row[:] = [value / divisor for value in pivot_row]
        for other in self.rows + [self.objective]:
            if other is pivot_row:
                continue
            factor = other[col]
            if self.field.is_zero(factor):
                continue
            other[:] = [a - factor * b for a, b in zip(other, pivot_row)]
        self.basis[row] = col

    def run(self, allowed: Sequence[int]) -> None:
        """Pivot until no allowed column has a negative reduced cost."""
        field = self.field
        while True:
            entering = next(
                (j for j in allowed if field.sign(self.objective[j]) < 0),
                None,
            )
            if entering is None:
                return
            leaving = None
            best_ratio: Scalar | None = None
            for i, row in enumerate(self.rows):
                if field.sign(row[entering]) <= 0:
                    continue
                ratio = row[-1] / row[entering]
                if best_ratio is None:
                    better = True
                else:
                    order = field.compare(ratio, best_ratio)
                    better = order < 0 or (
                        order == 0 and self.basis[i] < self.basis[leaving]
                    )
                if better:
                    leaving = i
                    best_ratio = ratio
            if leaving is None:
                raise LPUnboundedError(
                    "Objective is unbounded below along column "
                    f"{entering}"
                )
            self.pivot(leaving, entering)

    def price(self, costs: Sequence[Scalar]) -> None:
        """Rebuild the objective row as reduced costs of ``costs``."""
        field = self.field
        width = len(costs)
        reduced = list(costs) + [field.zero]
        for i, row in enumerate(self.rows):
            cost = costs[self.basis[i]]
            if field.is_zero(cost):
                continue
            for j in range(width + 1):
                reduced[j] = reduced[j] - cost * row[j]
        self.objective = reduced


def lp_solve(problem: LPProblem, max_pivots: int | None = None) -> LPSolution:
    """
    Solve a linear program with the two-phase simplex method.

    Every row receives an artificial column; phase one drives their sum
    to zero and phase two optimizes the objective. Bland's rule (lowest
    entering index, ties on the ratio test broken by lowest basic index)
    makes the pivot sequence deterministic and prevents cycling, so the
    same problem always yields the same basis.

    Args:
        problem: The program to solve
        max_pivots: Pivot budget; defaults to ``CONVEXMEANS_LP_MAX_PIVOTS``

    Returns:
        The optimal basic solution

    Raises:
        LPInfeasibleError: If no point satisfies the constraints
        LPUnboundedError: If the objective is unbounded below
        LPPivotLimitError: If the pivot budget is exhausted
    """
    if max_pivots is None:
        from django_convexmeans.conf import get_lp_max_pivots

        max_pivots = get_lp_max_pivots()

    field = problem.field
    zero = field.zero
    one = field.one

    # Column layout: split variables, slacks, artificials
    labels: list[str] = []
    split: list[tuple[int, int | None]] = []
    for j in range(problem.num_variables):
        plus = len(labels)
        labels.append(f"x{j}+")
        minus = None
        if j in problem.free:
            minus = len(labels)
            labels.append(f"x{j}-")
        split.append((plus, minus))
    slack_of: dict[int, tuple[int, int]] = {}
    for i, row in enumerate(problem.constraints):
        if row.sense != EQ:
            slack_of[i] = (len(labels), 1 if row.sense == LE else -1)
            labels.append(f"s{i}")
    first_artificial = len(labels)
    for i in range(len(problem.constraints)):
        labels.append(f"a{i}")
    width = len(labels)

    tableau = _Tableau(field, max_pivots)
    flipped: list[bool] = []
    for i, row in enumerate(problem.constraints):
        values = [zero] * (width + 1)
        for j, coefficient in enumerate(row.coefficients):
            plus, minus = split[j]
            values[plus] = coefficient
            if minus is not None:
                values[minus] = -coefficient
        if i in slack_of:
            column, sign = slack_of[i]
            values[column] = one if sign > 0 else -one
        values[-1] = row.rhs
        flip = field.sign(row.rhs) < 0
        if flip:
            values = [-value for value in values]
        values[first_artificial + i] = one
        flipped.append(flip)
        tableau.rows.append(values)
        tableau.basis.append(first_artificial + i)

    # Phase one
    phase_one = [zero] * first_artificial + [one] * (width - first_artificial)
    tableau.price(phase_one)
    tableau.run(range(width))
    if field.sign(-tableau.objective[-1]) > 0:
        raise LPInfeasibleError(
            "Linear program is infeasible "
            f"(residual {field.to_float(-tableau.objective[-1]):.3g})"
        )

    # Drive artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tableau.rows):
        if tableau.basis[i] < first_artificial:
            i += 1
            continue
        row = tableau.rows[i]
        column = next(
            (
                j
                for j in range(first_artificial)
                if not field.is_zero(row[j])
            ),
            None,
        )
        if column is None:
            logger.debug("Dropping redundant constraint row %d", i)
            del tableau.rows[i]
            del tableau.basis[i]
            continue
        tableau.pivot(i, column)
        i += 1

    # Phase two
    costs = [zero] * width
    for j, (plus, minus) in enumerate(split):
        costs[plus] = field.coerce(problem.objective[j])
        if minus is not None:
            costs[minus] = -costs[plus]
    tableau.price(costs)
    tableau.run(range(first_artificial))

    column_values = [zero] * width
    for i, column in enumerate(tableau.basis):
        column_values[column] = tableau.rows[i][-1]
    x = []
    for plus, minus in split:
        value = column_values[plus]
        if minus is not None:
            value = value - column_values[minus]
        x.append(value)

    value = zero
    for coefficient, xj in zip(problem.objective, x):
        value = value + field.coerce(coefficient) * xj

    duals = []
    for i, flip in enumerate(flipped):
        reduced = tableau.objective[first_artificial + i]
        duals.append(reduced if flip else -reduced)

    logger.debug(
        "LP solved: %d variables, %d constraints, %d pivots, value %s",
        problem.num_variables,
        len(problem.constraints),
        tableau.pivots,
        value,
    )
    return LPSolution(
        x=tuple(x),
        value=value,
        basis=tuple(labels[column] for column in tableau.basis),
        duals=tuple(duals),
        pivots=tableau.pivots,
    )
