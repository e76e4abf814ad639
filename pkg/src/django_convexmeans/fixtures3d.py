from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from django_convexmeans.exceptions import DegenerateGeometryError
from django_convexmeans.exceptions import DomainError
from django_convexmeans.geometry.scalar import EXACT
from django_convexmeans.geometry.scalar import Field
from django_convexmeans.geometry.scalar import Scalar
from django_convexmeans.optimize.containment import AsymmetryResult
from django_convexmeans.optimize.containment import asymmetry_lp
from django_convexmeans.optimize.containment import min_homothety
from django_convexmeans.optimize.lp import LE
from django_convexmeans.optimize.lp import LPProblem
from django_convexmeans.optimize.lp import lp_solve

logger = logging.getLogger(__name__)

Vector3 = tuple[Fraction, Fraction, Fraction]

HALF = Fraction(1, 2)

# Vertices of the regular simplex T; T's polar is -T
TETRAHEDRON: tuple[Vector3, ...] = tuple(
    (Fraction(x), Fraction(y), Fraction(z))
    for x, y, z in ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))
)


def _neg(v: Sequence[Fraction]) -> Vector3:
    return (-v[0], -v[1], -v[2])


def _dot(a: Sequence[Any], b: Sequence[Any]) -> Any:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _signs(*entries: int) -> list[Vector3]:
    """All sign choices of the non-zero entries, in lexicographic order."""
    vectors = set()
    for signs in itertools.product((1, -1), repeat=len(entries)):
        vectors.add(tuple(Fraction(s * e) for s, e in zip(signs, entries)))
    return sorted(vectors)


def _permutations(*entries: Any) -> list[Vector3]:
    vectors: set[Vector3] = set()
    for vector in _signs(*entries):
        permutations = itertools.permutations(vector)
        vectors.update(permutations)  # type: ignore[arg-type]
    return sorted(vectors)


def _unit_vectors() -> list[Vector3]:
    return _permutations(1, 0, 0)


@dataclass(frozen=True)
class PolytopeVH:
    """
    A 3-polytope in double description.

    ``facets`` are pairs (normal, offset) of halfspaces normal . x <= offset.
    """

    name: str
    vertices: tuple[Vector3, ...]
    facets: tuple[tuple[Vector3, Fraction], ...]

    def tight_facets(self, vertex: Sequence[Fraction]) -> list[int]:
        return [
            i
            for i, (normal, offset) in enumerate(self.facets)
            if _dot(normal, vertex) == offset
        ]

    def consistency_errors(self) -> list[str]:
        """Violations of the double description, empty when consistent."""
        errors = []
        for vertex in self.vertices:
            for normal, offset in self.facets:
                if _dot(normal, vertex) > offset:
                    errors.append(f"vertex {vertex} violates {normal}")
            if len(self.tight_facets(vertex)) < 3:
                errors.append(f"vertex {vertex} is tight on < 3 facets")
        for normal, offset in self.facets:
            tight = [v for v in self.vertices if _dot(normal, v) == offset]
            if len(tight) < 3:
                errors.append(f"facet {normal} is tight at < 3 vertices")
        return errors

    def is_consistent(self) -> bool:
        return not self.consistency_errors()

    def is_symmetric(self) -> bool:
        vertices = set(self.vertices)
        return all(_neg(v) in vertices for v in vertices)

    def support(self, u: Sequence[Any]) -> Any:
        """max over the vertices of u . v."""
        return max(_dot(u, v) for v in self.vertices)

    def support_from_facets(
        self,
        u: Sequence[Any],
        field: Field = EXACT,
    ) -> Scalar:
        """max u . x subject to the facet inequalities, via the LP solver."""
        problem = LPProblem(
            objective=[-field.coerce(c) for c in u],
            free=frozenset(range(3)),
            field=field,
        )
        for normal, offset in self.facets:
            problem.add(list(normal), LE, offset)
        return -lp_solve(problem).value

    def dilate(self, factor: Any) -> PolytopeVH:
        factor = Fraction(factor)
        if factor <= 0:
            raise DegenerateGeometryError("Dilatation factor must be positive")
        return PolytopeVH(
            name=f"{factor}*{self.name}",
            vertices=tuple(
                (v[0] * factor, v[1] * factor, v[2] * factor)
                for v in self.vertices
            ),
            facets=tuple(
                (normal, offset * factor) for normal, offset in self.facets
            ),
        )


def _simplex() -> PolytopeVH:
    return PolytopeVH(
        name="simplex",
        vertices=TETRAHEDRON,
        facets=tuple((_neg(v), Fraction(1)) for v in TETRAHEDRON),
    )


def _neg_simplex() -> PolytopeVH:
    return PolytopeVH(
        name="neg_simplex",
        vertices=tuple(_neg(v) for v in TETRAHEDRON),
        facets=tuple((v, Fraction(1)) for v in TETRAHEDRON),
    )


def _cross_polytope() -> PolytopeVH:
    # T meet -T
    return PolytopeVH(
        name="cross_polytope",
        vertices=tuple(_unit_vectors()),
        facets=tuple((n, Fraction(1)) for n in _signs(1, 1, 1)),
    )


def _rhombic_dodecahedron() -> PolytopeVH:
    # polar of the cuboctahedron
    return PolytopeVH(
        name="rhombic_dodecahedron",
        vertices=tuple(_unit_vectors() + _signs(HALF, HALF, HALF)),
        facets=tuple((n, Fraction(1)) for n in _permutations(1, 1, 0)),
    )


def _cuboctahedron() -> PolytopeVH:
    # (T - T) / 2
    return PolytopeVH(
        name="cuboctahedron",
        vertices=tuple(_permutations(1, 1, 0)),
        facets=tuple(
            [(n, Fraction(1)) for n in _unit_vectors()]
            + [(n, Fraction(2)) for n in _signs(1, 1, 1)]
        ),
    )


def _cube() -> PolytopeVH:
    # conv(T union -T)
    return PolytopeVH(
        name="cube",
        vertices=tuple(_signs(1, 1, 1)),
        facets=tuple((n, Fraction(1)) for n in _unit_vectors()),
    )


FIXTURES = {
    "simplex": _simplex,
    "neg_simplex": _neg_simplex,
    "cross_polytope": _cross_polytope,
    "rhombic_dodecahedron": _rhombic_dodecahedron,
    "cuboctahedron": _cuboctahedron,
    "cube": _cube,
}

# Minimum, harmonic, arithmetic and maximum of T and -T
MEANS_CHAIN = (
    "cross_polytope",
    "rhombic_dodecahedron",
    "cuboctahedron",
    "cube",
)


def canonical(name: str) -> PolytopeVH:
    """
    Raises:
        DomainError: If ``name`` is not a known fixture
    """
    try:
        builder = FIXTURES[name]
    except KeyError:
        raise DomainError(
            f"Unknown fixture {name!r}; expected one of "
            f"{', '.join(sorted(FIXTURES))}",
            name="name",
            value=name,
        ) from None
    return builder()


def simplex_asymmetry() -> AsymmetryResult:
    simplex = canonical("simplex")
    return asymmetry_lp(simplex.vertices, simplex.facets, EXACT)


@dataclass(frozen=True)
class ChainLine:
    inner: str
    outer: str
    rho: Scalar
    t: tuple[Scalar, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "inner": self.inner,
            "outer": self.outer,
            "rho": EXACT.to_json(self.rho),
            "t": [EXACT.to_json(c) for c in self.t],
        }


@dataclass(frozen=True)
class ChainReport:
    lines: tuple[ChainLine, ...]
    simplex_asymmetry: Scalar

    @property
    def optimal(self) -> bool:
        return all(EXACT.equal(line.rho, EXACT.one) for line in self.lines)

    def to_json(self) -> dict[str, Any]:
        return {
            "lines": [line.to_json() for line in self.lines],
            "simplex_asymmetry": EXACT.to_json(self.simplex_asymmetry),
            "optimal": self.optimal,
        }


def chain_pairs() -> list[tuple[str, str]]:
    """
    Consecutive pairs of the means chain, the skip pair minimum in maximum
    and the simplex in the maximum.
    """
    pairs = list(zip(MEANS_CHAIN, MEANS_CHAIN[1:]))
    pairs.append((MEANS_CHAIN[0], MEANS_CHAIN[-1]))
    pairs.append(("simplex", MEANS_CHAIN[-1]))
    return pairs


def chain_optimality_3d() -> ChainReport:
    """
    Minimal homotheties along the means chain of T and -T.

    Each inclusion is optimal, so every line reports rho = 1.
    """
    lines = []
    for inner_name, outer_name in chain_pairs():
        inner = canonical(inner_name)
        outer = canonical(outer_name)
        result = min_homothety(
            list(inner.vertices), list(outer.facets), field=EXACT
        )
        lines.append(ChainLine(inner_name, outer_name, result.rho, result.t))
        logger.debug("%s in %s: rho=%s", inner_name, outer_name, result.rho)
    return ChainReport(
        lines=tuple(lines), simplex_asymmetry=simplex_asymmetry().s
    )
