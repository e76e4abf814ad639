from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from django.apps import AppConfig
from django.conf import settings
from django.core.checks import Error
from django.core.checks import Tags
from django.core.checks import Warning
from django.core.checks import register

from django_convexmeans.geometry.scalar import BACKENDS

logger = logging.getLogger(__name__)

MAX_FLOAT_TOLERANCE = 1e-3


def _is_tolerance_valid(value: Any) -> bool:
    return (
        isinstance(value, float)
        and not isinstance(value, bool)
        and 0.0 < value < MAX_FLOAT_TOLERANCE
    )


def _is_positive_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value > 0


def _is_color_map_valid(value: Any) -> bool:
    return isinstance(value, dict) and all(
        isinstance(k, str) and isinstance(v, str) for k, v in value.items()
    )


@dataclass(frozen=True)
class SettingProblem:
    """An invalid CONVEXMEANS_* setting and how to report it."""

    setting: str
    value: Any
    message: str
    hint: str
    id: str
    serious: bool = True


def find_setting_problems() -> list[SettingProblem]:
    """
    Validate every CONVEXMEANS_* setting.

    Shared by the startup log in ``ready()`` and the system check, so both
    report the same problems.
    """
    problems = []

    tolerance = getattr(settings, "CONVEXMEANS_FLOAT_TOLERANCE", None)
    if tolerance is not None and not _is_tolerance_valid(tolerance):
        problems.append(
            SettingProblem(
                setting="CONVEXMEANS_FLOAT_TOLERANCE",
                value=tolerance,
                message=(
                    "CONVEXMEANS_FLOAT_TOLERANCE must be a positive float "
                    f"below {MAX_FLOAT_TOLERANCE}"
                ),
                hint="Use a value such as 1e-9.",
                id="django_convexmeans.E001",
            )
        )

    backend = getattr(settings, "CONVEXMEANS_DEFAULT_BACKEND", None)
    if backend is not None and backend not in BACKENDS:
        problems.append(
            SettingProblem(
                setting="CONVEXMEANS_DEFAULT_BACKEND",
                value=backend,
                message=(
                    "CONVEXMEANS_DEFAULT_BACKEND is not a known scalar backend"
                ),
                hint=f"Use one of: {', '.join(BACKENDS)}.",
                id="django_convexmeans.E002",
            )
        )

    workers = getattr(settings, "CONVEXMEANS_SEARCH_WORKERS", None)
    if workers is not None and not _is_positive_int(workers):
        problems.append(
            SettingProblem(
                setting="CONVEXMEANS_SEARCH_WORKERS",
                value=workers,
                message="CONVEXMEANS_SEARCH_WORKERS must be a positive int",
                hint="Use 1 to search in-process.",
                id="django_convexmeans.E003",
            )
        )

    pivots = getattr(settings, "CONVEXMEANS_LP_MAX_PIVOTS", None)
    if pivots is not None and not _is_positive_int(pivots):
        problems.append(
            SettingProblem(
                setting="CONVEXMEANS_LP_MAX_PIVOTS",
                value=pivots,
                message="CONVEXMEANS_LP_MAX_PIVOTS must be a positive int",
                hint="The default pivot budget is 10000.",
                id="django_convexmeans.E004",
            )
        )

    colors = getattr(settings, "CONVEXMEANS_FIGURE_COLORS", None)
    if colors is not None and not _is_color_map_valid(colors):
        problems.append(
            SettingProblem(
                setting="CONVEXMEANS_FIGURE_COLORS",
                value=colors,
                message="CONVEXMEANS_FIGURE_COLORS is not a dict of strings",
                hint=(
                    "Map layer names such as 'body' or 'harmonic' to SVG "
                    "colors. The default palette is used instead."
                ),
                id="django_convexmeans.W001",
                serious=False,
            )
        )

    return problems


def _migrations_pending(alias: str) -> bool:
    try:
        from django.db import connections
        from django.db.migrations.executor import MigrationExecutor

        executor = MigrationExecutor(connections[alias])
        targets = [
            node
            for node in executor.loader.graph.leaf_nodes()
            if node[0] == "django_convexmeans"
        ]
        return bool(executor.migration_plan(targets))
    except Exception:
        logger.warning("Failed to check migration status", exc_info=True)
        return False


class DjangoConvexMeansConfig(AppConfig):
    """Django app configuration for django-convexmeans."""

    name = "django_convexmeans"
    verbose_name = "Django Convex Means"
    default_auto_field = (  # type: ignore[assignment]
        "django.db.models.BigAutoField"
    )

    def ready(self) -> None:
        """
        Perform startup validation when the app is ready.

        Invalid settings are logged here and reported in detail by the
        system checks; the accessors in ``conf`` fall back to defaults.
        The database is not touched; pending migrations are reported by
        ``check --database`` and ``migrate``.
        """
        self._validate_configuration()

    def _validate_configuration(self) -> None:
        for problem in find_setting_problems():
            logger.warning("%s, got %r", problem.message, problem.value)

        # Log persistence status
        if getattr(settings, "CONVEXMEANS_PERSISTENCE_ENABLED", True):
            logger.info("Search run persistence is enabled")
        else:
            logger.debug("Search run persistence is disabled")


@register()
def check_convexmeans_settings(app_configs, **kwargs):
    """
    Django system check for convexmeans configuration.

    Returns errors for invalid settings.
    """
    messages = []
    for problem in find_setting_problems():
        level = Error if problem.serious else Warning
        messages.append(
            level(problem.message, hint=problem.hint, id=problem.id)
        )
    return messages


@register(Tags.database)
def check_convexmeans_migrations(app_configs, databases=None, **kwargs):
    """
    Warn about unapplied django_convexmeans migrations.

    Database checks only run for ``check --database`` and ``migrate``.
    """
    warnings = []
    for alias in databases or ():
        if _migrations_pending(alias):
            warnings.append(
                Warning(
                    "Pending migrations detected for django_convexmeans",
                    hint="Run 'python manage.py migrate django_convexmeans'.",
                    id="django_convexmeans.W002",
                )
            )
    return warnings
