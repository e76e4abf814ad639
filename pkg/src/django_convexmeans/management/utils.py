from __future__ import annotations

import json
import sys
from collections.abc import Callable
from typing import Any

from django.core.management.base import CommandError

from django_convexmeans.exceptions import DomainError
from django_convexmeans.exceptions import GeometryError
from django_convexmeans.exceptions import LPError
from django_convexmeans.exceptions import ScalarError
from django_convexmeans.geometry.polygon import ConvexPolygon
from django_convexmeans.geometry.scalar import BACKENDS
from django_convexmeans.geometry.scalar import get_field
from django_convexmeans.geometry.serialization import polygon_from_json
from django_convexmeans.golden.house import golden_house
from django_convexmeans.optimize.containment import recenter

# Exit codes of the command-line surface
EXIT_PARSE_ERROR = 2
EXIT_GEOMETRY_ERROR = 3
EXIT_LP_ERROR = 4


def exit_code_for(error: Exception) -> int:
    if isinstance(error, LPError):
        return EXIT_LP_ERROR
    if isinstance(error, (GeometryError, DomainError)):
        return EXIT_GEOMETRY_ERROR
    if isinstance(error, (ScalarError, json.JSONDecodeError)):
        return EXIT_PARSE_ERROR
    return 1


def run_guarded(fn: Callable[[], Any]) -> Any:
    """
    Call ``fn``, translating library errors into CommandError.

    Raises:
        CommandError: With the exit code of the underlying error
    """
    try:
        return fn()
    except (
        LPError,
        GeometryError,
        DomainError,
        ScalarError,
        json.JSONDecodeError,
    ) as e:
        raise CommandError(
            f"{type(e).__name__}: {e}", returncode=exit_code_for(e)
        ) from e


def add_polygon_arguments(parser: Any) -> None:
    parser.add_argument(
        "input",
        nargs="?",
        default=None,
        help="Polygon JSON file, or '-' for stdin",
    )
    parser.add_argument(
        "--golden-house",
        action="store_true",
        help="Use the golden house instead of an input polygon",
    )
    parser.add_argument(
        "--backend",
        choices=BACKENDS,
        default=None,
        help="Scalar backend (default: CONVEXMEANS_DEFAULT_BACKEND)",
    )


def add_recenter_argument(parser: Any) -> None:
    parser.add_argument(
        "--recenter",
        action="store_true",
        help="Translate the polygon to its Minkowski center first",
    )


def read_polygon(options: dict[str, Any], stdin: Any = None) -> ConvexPolygon:
    """
    Load the polygon selected by the command options.

    Raises:
        CommandError: If neither an input nor --golden-house is given
    """
    backend = options.get("backend")
    if options.get("golden_house"):
        polygon = golden_house(get_field(backend))
    else:
        source = options.get("input")
        if source is None:
            raise CommandError(
                "Pass a polygon JSON file, '-' or --golden-house",
                returncode=EXIT_PARSE_ERROR,
            )
        if source == "-":
            text = (stdin or sys.stdin).read()
        else:
            try:
                with open(source, encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as e:
                raise CommandError(f"Cannot read {source}: {e}") from e
        polygon = polygon_from_json(text)
        if backend is not None:
            polygon = polygon.with_field(get_field(backend))
    if options.get("recenter"):
        polygon = recenter(polygon)
    return polygon


def dumps(document: Any) -> str:
    """Deterministic JSON text of a command result."""
    return json.dumps(document, indent=2, sort_keys=True)
