from __future__ import annotations

from typing import Any

from django.core.management.base import BaseCommand

from django_convexmeans.geometry.means import means_chain
from django_convexmeans.geometry.serialization import polygon_to_json
from django_convexmeans.management.utils import add_polygon_arguments
from django_convexmeans.management.utils import add_recenter_argument
from django_convexmeans.management.utils import dumps
from django_convexmeans.management.utils import read_polygon
from django_convexmeans.management.utils import run_guarded
from django_convexmeans.optimize.containment import is_opt_contained


def means_document(options: dict[str, Any]) -> dict[str, Any]:
    polygon = read_polygon(options)
    chain = means_chain(polygon)
    minimum_in_maximum, _ = is_opt_contained(chain.minimum, chain.maximum)
    harmonic_in_arithmetic, _ = is_opt_contained(
        chain.harmonic, chain.arithmetic
    )
    document: dict[str, Any] = {
        name: polygon_to_json(body) for name, body in chain.layers()
    }
    document["optimal"] = {
        "minimum_in_maximum": minimum_in_maximum,
        "harmonic_in_arithmetic": harmonic_in_arithmetic,
    }
    document["inclusions_hold"] = chain.inclusions_hold()
    return document


class Command(BaseCommand):
    """
    Print the four symmetrizations of a polygon against its negative.

    The polygon must contain 0 in its interior; --recenter moves it to its
    Minkowski center first.
    """

    help = "Compute the minimum, harmonic, arithmetic and maximum means"

    def add_arguments(self, parser):
        add_polygon_arguments(parser)
        add_recenter_argument(parser)

    def handle(self, *args, **options):
        document = run_guarded(lambda: means_document(options))
        self.stdout.write(dumps(document))
