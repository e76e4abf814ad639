from __future__ import annotations

from .means import MeansChain
from .means import intersect
from .means import mean_arith
from .means import mean_harm
from .means import mean_max
from .means import mean_min
from .means import means_chain
from .means import minkowski_sum
from .means import polar
from .polygon import ConvexPolygon
from .polygon import Point2
from .polygon import convex_hull
from .polygon import support
from .scalar import EXACT
from .scalar import Q5
from .scalar import FloatField
from .scalar import get_field
from .serialization import polygon_from_json
from .serialization import polygon_to_json

__all__ = [
    "EXACT",
    "ConvexPolygon",
    "FloatField",
    "MeansChain",
    "Point2",
    "Q5",
    "convex_hull",
    "get_field",
    "intersect",
    "mean_arith",
    "mean_harm",
    "mean_max",
    "mean_min",
    "means_chain",
    "minkowski_sum",
    "polar",
    "polygon_from_json",
    "polygon_to_json",
    "support",
]
