from __future__ import annotations

from .containment import asymmetry_lp
from .containment import is_opt_contained
from .containment import min_homothety
from .containment import minkowski_asymmetry
from .containment import touching_hull_contains_zero
from .lp import LPProblem
from .lp import lp_solve

__all__ = [
    "LPProblem",
    "asymmetry_lp",
    "is_opt_contained",
    "lp_solve",
    "min_homothety",
    "minkowski_asymmetry",
    "touching_hull_contains_zero",
]
