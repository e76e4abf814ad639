from __future__ import annotations

__version__ = "0.1.0"

from .geometry import ConvexPolygon
from .geometry import means_chain
from .golden import golden_house
from .optimize import min_homothety
from .optimize import minkowski_asymmetry

__all__ = [
    "ConvexPolygon",
    "golden_house",
    "means_chain",
    "min_homothety",
    "minkowski_asymmetry",
]
