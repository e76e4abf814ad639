from __future__ import annotations

from typing import Any

from django.core.management.base import BaseCommand

from django_convexmeans.management.utils import add_polygon_arguments
from django_convexmeans.management.utils import dumps
from django_convexmeans.management.utils import read_polygon
from django_convexmeans.management.utils import run_guarded
from django_convexmeans.optimize.containment import minkowski_asymmetry


def asymmetry_document(options: dict[str, Any]) -> dict[str, Any]:
    polygon = read_polygon(options)
    field = polygon.field
    result = minkowski_asymmetry(polygon)
    return {
        "scalar": field.name,
        "s": field.to_json(result.s),
        "center": [field.to_json(c) for c in result.center],
        "touching": [
            [field.to_json(c) for c in point] for point in result.touching
        ],
    }


class Command(BaseCommand):
    help = "Compute the Minkowski asymmetry and center of a polygon"

    def add_arguments(self, parser):
        add_polygon_arguments(parser)

    def handle(self, *args, **options):
        document = run_guarded(lambda: asymmetry_document(options))
        self.stdout.write(dumps(document))
