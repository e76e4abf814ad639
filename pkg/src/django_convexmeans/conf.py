from __future__ import annotations

from typing import Any

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULT_FLOAT_TOLERANCE = 1e-9

DEFAULT_BACKEND = "q5"

DEFAULT_SEARCH_WORKERS = 1

DEFAULT_LP_MAX_PIVOTS = 10000

# Palette of the golden house figures
DEFAULT_FIGURE_COLORS = {
    "body": "#b2182b",
    "dilate": "#2166ac",
    "minimum": "#2166ac",
    "harmonic": "#7b3294",
    "arithmetic": "#b2182b",
    "maximum": "#e66101",
    "support": "#000000",
}


def _get_setting(name: str, default: Any) -> Any:
    """
    Read a setting, falling back to the default outside a Django project.

    Geometry and LP code is usable without configured settings, so a missing
    settings module is treated like a missing attribute.
    """
    try:
        return getattr(settings, name, default)
    except ImproperlyConfigured:
        return default


def get_float_tolerance() -> float:
    """Get the comparison tolerance of the float backend."""
    return float(
        _get_setting("CONVEXMEANS_FLOAT_TOLERANCE", DEFAULT_FLOAT_TOLERANCE)
    )


def get_default_backend() -> str:
    """Get the scalar backend used when a command gets no --backend."""
    return str(_get_setting("CONVEXMEANS_DEFAULT_BACKEND", DEFAULT_BACKEND))


def is_persistence_enabled() -> bool:
    """Check if threshold search runs are persisted to the database."""
    return bool(_get_setting("CONVEXMEANS_PERSISTENCE_ENABLED", True))


def get_search_workers() -> int:
    """Get the number of worker processes for the threshold search."""
    return int(
        _get_setting("CONVEXMEANS_SEARCH_WORKERS", DEFAULT_SEARCH_WORKERS)
    )


def get_lp_max_pivots() -> int:
    """Get the pivot budget of a single simplex solve."""
    return int(
        _get_setting("CONVEXMEANS_LP_MAX_PIVOTS", DEFAULT_LP_MAX_PIVOTS)
    )


def get_figure_colors() -> dict[str, str]:
    """Get the figure palette, with configured colors overriding defaults."""
    colors = dict(DEFAULT_FIGURE_COLORS)
    configured = _get_setting("CONVEXMEANS_FIGURE_COLORS", None)
    if isinstance(configured, dict):
        colors.update(configured)
    return colors
