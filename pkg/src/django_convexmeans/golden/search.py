from __future__ import annotations

import json
import logging
from collections.abc import Callable
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from typing import IO
from typing import Any

import numpy as np

from django_convexmeans.exceptions import DegenerateGeometryError
from django_convexmeans.exceptions import LPError
from django_convexmeans.geometry.polygon import ConvexPolygon
from django_convexmeans.geometry.polygon import hausdorff_distance
from django_convexmeans.geometry.polygon import transform
from django_convexmeans.geometry.polygon import translate
from django_convexmeans.geometry.scalar import FloatField
from django_convexmeans.geometry.serialization import polygon_to_json
from django_convexmeans.golden.conditions import SupportWitness
from django_convexmeans.golden.conditions import condition_iii
from django_convexmeans.golden.families import random_house
from django_convexmeans.golden.families import random_polygon
from django_convexmeans.golden.house import golden_house
from django_convexmeans.optimize.containment import minkowski_asymmetry

logger = logging.getLogger(__name__)

SOURCE_RANDOM = "random"
SOURCE_HOUSE = "house"
SOURCE_HILL_CLIMB = "hill_climb"

# Hill-climb defaults
PERTURBATION = 1e-3
INITIAL_STEP = 1e-2
MIN_STEP = 1e-6
STEP_DECAY = 0.5
PROJECTION_ITERATIONS = 16
MAX_MOVES_PER_STEP = 25
PAIR_TOLERANCE = 1e-12
START_ATTEMPTS = 32


@dataclass(frozen=True)
class SampleRecord:
    """One evaluated polygon, re-centered at its Minkowski center."""

    seed: int
    source: str
    s: float
    polygon: ConvexPolygon
    witness: SupportWitness | None

    def to_json(self) -> dict[str, Any]:
        field = self.polygon.field
        return {
            "seed": self.seed,
            "source": self.source,
            "s": float(self.s),
            "vertices": polygon_to_json(self.polygon)["vertices"],
            "cond_iii_witness": (
                self.witness.to_json(field) if self.witness else None
            ),
        }


def evaluate_polygon(P: ConvexPolygon, seed: int, source: str) -> SampleRecord:
    """Re-center P and evaluate its asymmetry and condition (iii)."""
    result = minkowski_asymmetry(P)
    centered = translate(P, -result.center_point)
    return SampleRecord(
        seed=seed,
        source=source,
        s=float(result.s),
        polygon=centered,
        witness=condition_iii(centered),
    )


def sample_seed(
    seed: int,
    vertex_range: tuple[int, int] = (5, 12),
    min_vertices: int = 5,
    tolerance: float | None = None,
) -> list[SampleRecord]:
    """
    Evaluate the annulus polygon and the random house of one seed.

    Pure given its arguments, so seeds can be spread over processes.
    """
    rng = np.random.default_rng(seed)
    records = [
        evaluate_polygon(
            random_polygon(rng, vertex_range, min_vertices, tolerance),
            seed,
            SOURCE_RANDOM,
        )
    ]
    house = random_house(rng)
    records.append(
        evaluate_polygon(house.polygon(tolerance), seed, SOURCE_HOUSE)
    )
    return records


def _antipodal_pair(points: np.ndarray) -> tuple[int, int]:
    """Indices of the two vertices closest to being antipodal."""
    sums = np.linalg.norm(points[:, None, :] + points[None, :, :], axis=2)
    np.fill_diagonal(sums, np.inf)
    i, j = np.unravel_index(int(np.argmin(sums)), sums.shape)
    return int(i), int(j)


def _restore_pair(
    points: np.ndarray,
    pair: tuple[int, int],
    tolerance: float | None,
) -> np.ndarray | None:
    """
    Alternate Minkowski re-centering with re-symmetrizing the pair.

    Returns the fixed point, or None if the points stop bounding a convex
    polygon or the iteration does not settle.
    """
    i, j = pair
    points = points.copy()
    field = FloatField(tolerance)
    for _ in range(PROJECTION_ITERATIONS):
        try:
            center = minkowski_asymmetry(
                ConvexPolygon([tuple(p) for p in points], field)
            ).center
        except (DegenerateGeometryError, LPError):
            return None
        points -= np.array([float(c) for c in center])
        offset = (points[i] + points[j]) / 2
        points[i] -= offset
        points[j] -= offset
        settled = max(
            float(np.linalg.norm(center)), float(np.linalg.norm(offset))
        )
        if settled <= PAIR_TOLERANCE:
            return points
    return None


def _evaluate_vertices(
    points: np.ndarray,
    pair: tuple[int, int],
    seed: int,
    tolerance: float | None,
) -> SampleRecord | None:
    """
    Project onto bodies with an antipodal vertex pair and evaluate.

    Returns None if the projection fails or condition (iii) does not hold.
    """
    restored = _restore_pair(points, pair, tolerance)
    if restored is None:
        return None
    try:
        polygon = ConvexPolygon(
            [tuple(p) for p in restored], FloatField(tolerance)
        )
        record = evaluate_polygon(polygon, seed, SOURCE_HILL_CLIMB)
    except (DegenerateGeometryError, LPError):
        return None
    return record if record.witness is not None else None


def _project(
    origin: np.ndarray,
    target: np.ndarray,
    pair: tuple[int, int],
    seed: int,
    tolerance: float | None,
) -> SampleRecord | None:
    """Furthest feasible point on [origin, target] by bisection."""
    low, high = 0.0, 1.0
    best = None
    for _ in range(PROJECTION_ITERATIONS):
        middle = (low + high) / 2
        record = _evaluate_vertices(
            origin + middle * (target - origin), pair, seed, tolerance
        )
        if record is None:
            high = middle
        else:
            low = middle
            best = record
    return best


def _vertex_array(record: SampleRecord) -> np.ndarray:
    return np.array([v.to_float() for v in record.polygon.vertices])


def hill_climb(
    seed: int,
    perturbation: float = PERTURBATION,
    initial_step: float = INITIAL_STEP,
    min_step: float = MIN_STEP,
    decay: float = STEP_DECAY,
    tolerance: float | None = None,
) -> SampleRecord:
    """
    Maximize the asymmetry over polygons satisfying condition (iii).

    Starts from the golden house with every vertex coordinate perturbed
    independently and moves one vertex coordinate at a time. After each
    move the body is re-centered and its antipodal vertex pair restored;
    moves that still leave the feasible set are pulled back by bisection
    on the step fraction. Accepted bodies are re-canonicalized. When no
    move improves, the step shrinks by ``decay`` until it drops below
    ``min_step``.

    Raises:
        DegenerateGeometryError: If no perturbed start satisfies
            condition (iii)
    """
    rng = np.random.default_rng(seed)
    golden = np.array(
        [p.to_float() for p in golden_house(FloatField(tolerance)).vertices]
    )
    best = None
    for _ in range(START_ATTEMPTS):
        start = golden + rng.uniform(
            -perturbation, perturbation, size=golden.shape
        )
        best = _evaluate_vertices(
            start, _antipodal_pair(start), seed, tolerance
        )
        if best is not None:
            break
    if best is None:
        raise DegenerateGeometryError(
            f"No feasible start near the golden house for seed {seed}"
        )

    current = _vertex_array(best)
    pair = _antipodal_pair(current)
    step = initial_step
    while step >= min_step:
        moves = 0
        improved = True
        while improved and moves < MAX_MOVES_PER_STEP:
            improved = False
            for index in np.ndindex(*current.shape):
                for direction in (1.0, -1.0):
                    target = current.copy()
                    target[index] += direction * step
                    record = _evaluate_vertices(
                        target, pair, seed, tolerance
                    )
                    if record is None:
                        record = _project(
                            current, target, pair, seed, tolerance
                        )
                    if record is not None and record.s > best.s:
                        best = record
                        current = _vertex_array(record)
                        pair = _antipodal_pair(current)
                        improved = True
                        moves += 1
                        break
                if improved:
                    break
        step *= decay
    logger.debug("Hill-climb seed %d reached s=%.12f", seed, best.s)
    return best


@dataclass
class SearchOutcome:
    """Merged result of a threshold search."""

    max_s: float = 0.0
    best: SampleRecord | None = None
    evaluated: int = 0
    accepted: int = 0
    records: list[SampleRecord] = dataclass_field(default_factory=list)

    def merge(self, record: SampleRecord, require_condition: bool) -> bool:
        """Add a record; ties keep the earlier (lower) seed."""
        self.evaluated += 1
        if require_condition and record.witness is None:
            return False
        self.accepted += 1
        self.records.append(record)
        if self.best is None or record.s > self.max_s:
            self.max_s = record.s
            self.best = record
        return True


def _map(
    fn: Callable[..., Any],
    arguments: Iterable[Any],
    workers: int,
) -> Iterable[Any]:
    if workers <= 1:
        return map(fn, arguments)
    executor = ProcessPoolExecutor(max_workers=workers)
    try:
        return list(executor.map(fn, arguments))
    finally:
        executor.shutdown()


def _sample_args(args: tuple[Any, ...]) -> list[SampleRecord]:
    return sample_seed(*args)


def _climb_args(args: tuple[Any, ...]) -> SampleRecord:
    return hill_climb(args[0], tolerance=args[1])


def threshold_search(
    seed: int,
    iterations: int,
    vertex_range: tuple[int, int] = (5, 12),
    require_condition: bool = True,
    hill_climbs: int = 0,
    workers: int | None = None,
    tolerance: float | None = None,
    on_record: Callable[[SampleRecord], None] | None = None,
) -> SearchOutcome:
    """
    Look for large asymmetry among bodies satisfying condition (iii).

    Seeds ``seed .. seed + iterations - 1`` each contribute an annulus
    polygon and a random house; ``hill_climbs`` further runs climb from
    perturbed golden houses. Results are merged in seed order, so the
    outcome does not depend on how seeds were spread over workers.

    Args:
        seed: First seed
        iterations: Number of seeds
        vertex_range: Range of annulus sample sizes
        require_condition: Only keep bodies satisfying condition (iii);
            when off, triangles are admitted as well
        hill_climbs: Number of hill-climb runs
        workers: Worker processes; defaults to ``CONVEXMEANS_SEARCH_WORKERS``
        tolerance: Float backend tolerance override
        on_record: Called in seed order for every accepted record
    """
    if workers is None:
        from django_convexmeans.conf import get_search_workers

        workers = get_search_workers()
    min_vertices = 5 if require_condition else 3

    outcome = SearchOutcome()
    sample_args = [
        (s, vertex_range, min_vertices, tolerance)
        for s in range(seed, seed + iterations)
    ]
    for records in _map(_sample_args, sample_args, workers):
        for record in records:
            if outcome.merge(record, require_condition) and on_record:
                on_record(record)

    climb_args = [(s, tolerance) for s in range(seed, seed + hill_climbs)]
    for record in _map(_climb_args, climb_args, workers):
        if outcome.merge(record, require_condition) and on_record:
            on_record(record)

    logger.info(
        "Threshold search seed=%d: %d evaluated, %d accepted, max s=%.12f",
        seed,
        outcome.evaluated,
        outcome.accepted,
        outcome.max_s,
    )
    return outcome


def normalize_extremal(
    C: ConvexPolygon,
    witness: SupportWitness,
) -> ConvexPolygon:
    """
    Map the antipodal pair +-p to (+-1, 0) and the apex to (0, phi).

    The apex is the vertex farthest from the line through +-p. For a body
    in the linear orbit of the golden house the result is the golden house.
    """
    field = C.field
    p = witness.p
    apex = C.vertices[0]
    for vertex in C.vertices[1:]:
        if field.compare(abs(p.cross(vertex)), abs(p.cross(apex))) > 0:
            apex = vertex
    det = p.x * apex.y - apex.x * p.y
    if field.is_zero(det):
        raise DegenerateGeometryError("Apex lies on the antipodal line")
    phi = field.phi
    # diag(1, phi) composed with the inverse of [p | apex]
    matrix = (
        (apex.y / det, -apex.x / det),
        (-p.y * phi / det, p.x * phi / det),
    )
    return transform(C, matrix)


def extremal_distance(record: SampleRecord) -> float:
    """Hausdorff distance of a normalized record to the golden house."""
    if record.witness is None:
        raise DegenerateGeometryError("Record has no antipodal witness")
    normalized = normalize_extremal(record.polygon, record.witness)
    return hausdorff_distance(normalized, golden_house(FloatField()))


def write_jsonl(records: Iterable[SampleRecord], stream: IO[str]) -> int:
    """Write one JSON object per line; returns the number written."""
    count = 0
    for record in records:
        stream.write(json.dumps(record.to_json(), sort_keys=True) + "\n")
        count += 1
    return count
