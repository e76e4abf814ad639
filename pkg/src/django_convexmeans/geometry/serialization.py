from __future__ import annotations

import json
from typing import Any

from django_convexmeans.exceptions import PolygonFormatError
from django_convexmeans.exceptions import ScalarError
from django_convexmeans.geometry.polygon import ConvexPolygon
from django_convexmeans.geometry.polygon import Point2
from django_convexmeans.geometry.scalar import Field
from django_convexmeans.geometry.scalar import get_field


def point_to_json(p: Point2, field: Field) -> list[Any]:
    return [field.to_json(p.x), field.to_json(p.y)]


def polygon_to_json(P: ConvexPolygon) -> dict[str, Any]:
    """
    Serialize a polygon as ``{"scalar": ..., "vertices": [[x, y], ...]}``.

    Exact coordinates become ``"p1/q1+p2/q2*r5"`` strings, so parsing the
    document again yields an identical canonical polygon.
    """
    return {
        "scalar": P.field.name,
        "vertices": [point_to_json(v, P.field) for v in P.vertices],
    }


def polygon_from_json(
    data: dict[str, Any] | str,
    tolerance: float | None = None,
) -> ConvexPolygon:
    """
    Parse a polygon document.

    The vertices need only be in convex position; they are re-canonicalized.

    Args:
        data: The decoded document or its JSON text
        tolerance: Float backend tolerance override

    Raises:
        PolygonFormatError: If the document does not follow the schema
        DegenerateGeometryError: If the vertices do not bound a convex
            polygon of positive area
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise PolygonFormatError(f"Invalid polygon JSON: {e}") from e
    if not isinstance(data, dict):
        raise PolygonFormatError("Polygon document must be a JSON object")

    try:
        field = get_field(data.get("scalar", "q5"), tolerance)
    except ScalarError as e:
        raise PolygonFormatError(str(e)) from e

    raw_vertices = data.get("vertices")
    if not isinstance(raw_vertices, list):
        raise PolygonFormatError("Polygon document needs a 'vertices' list")

    vertices = []
    for raw in raw_vertices:
        if not isinstance(raw, (list, tuple)) or len(raw) != 2:
            raise PolygonFormatError(f"Vertex must be an [x, y] pair: {raw!r}")
        try:
            vertices.append(
                Point2(field.coerce(raw[0]), field.coerce(raw[1]))
            )
        except ScalarError as e:
            raise PolygonFormatError(str(e)) from e
    return ConvexPolygon(vertices, field)


def dumps_polygon(P: ConvexPolygon) -> str:
    return json.dumps(polygon_to_json(P), sort_keys=True)
