from __future__ import annotations

from .conditions import condition_iii
from .conditions import equivalence_report
from .families import hexagon_family
from .house import gamma
from .house import golden_house
from .house import h_of_a
from .search import threshold_search

__all__ = [
    "condition_iii",
    "equivalence_report",
    "gamma",
    "golden_house",
    "h_of_a",
    "hexagon_family",
    "threshold_search",
]
