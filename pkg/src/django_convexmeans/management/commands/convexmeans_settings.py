from __future__ import annotations

from typing import Any

from django.conf import settings
from django.core.management.base import BaseCommand

from django_convexmeans.conf import DEFAULT_BACKEND
from django_convexmeans.conf import DEFAULT_FIGURE_COLORS
from django_convexmeans.conf import DEFAULT_FLOAT_TOLERANCE
from django_convexmeans.conf import DEFAULT_LP_MAX_PIVOTS
from django_convexmeans.conf import DEFAULT_SEARCH_WORKERS

_SETTINGS = [
    {
        "name": "CONVEXMEANS_FLOAT_TOLERANCE",
        "required": False,
        "default": DEFAULT_FLOAT_TOLERANCE,
    },
    {
        "name": "CONVEXMEANS_DEFAULT_BACKEND",
        "required": False,
        "default": DEFAULT_BACKEND,
    },
    {
        "name": "CONVEXMEANS_PERSISTENCE_ENABLED",
        "required": False,
        "default": True,
    },
    {
        "name": "CONVEXMEANS_SEARCH_WORKERS",
        "required": False,
        "default": DEFAULT_SEARCH_WORKERS,
    },
    {
        "name": "CONVEXMEANS_FIGURE_COLORS",
        "required": False,
        "default": DEFAULT_FIGURE_COLORS,
    },
    {
        "name": "CONVEXMEANS_LP_MAX_PIVOTS",
        "required": False,
        "default": DEFAULT_LP_MAX_PIVOTS,
    },
]


def _format_value(value: Any) -> str:
    if value is None:
        return "unset"
    return str(value)


class Command(BaseCommand):
    help = "List django-convexmeans settings and current values"

    def handle(self, *args, **options) -> None:
        self.stdout.write("Django Convex Means settings")
        self.stdout.write("")

        sentinel = object()

        for item in _SETTINGS:
            name = item["name"]
            required = "required" if item["required"] else "optional"
            current = getattr(settings, name, sentinel)
            current_text = "unset"
            if current is not sentinel:
                current_text = _format_value(current)

            self.stdout.write(name)
            self.stdout.write(f"  Required: {required}")
            self.stdout.write(f"  Default: {_format_value(item['default'])}")
            self.stdout.write(f"  Current: {current_text}")
            self.stdout.write("")
