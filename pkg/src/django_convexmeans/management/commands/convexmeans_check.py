from __future__ import annotations

from typing import Any

from django.core.management.base import BaseCommand

from django_convexmeans.golden.conditions import equivalence_report
from django_convexmeans.golden.families import regular_ngon
from django_convexmeans.management.utils import add_polygon_arguments
from django_convexmeans.management.utils import add_recenter_argument
from django_convexmeans.management.utils import dumps
from django_convexmeans.management.utils import read_polygon
from django_convexmeans.management.utils import run_guarded


def check_document(options: dict[str, Any]) -> dict[str, Any]:
    if options.get("ngon") is not None:
        polygon = regular_ngon(options["ngon"])
    else:
        polygon = read_polygon(options)
    report = equivalence_report(polygon)
    document = report.to_json(polygon.field)
    document["consistent"] = report.consistent
    return document


class Command(BaseCommand):
    """
    Evaluate the three optimality conditions of a Minkowski centered body.

    Reports whether C meet -C is optimally contained in conv(C union -C),
    whether the harmonic mean is optimally contained in the arithmetic
    mean, and whether antipodal parallel supports exist.
    """

    help = "Check the optimality conditions of a Minkowski centered polygon"

    def add_arguments(self, parser):
        add_polygon_arguments(parser)
        add_recenter_argument(parser)
        parser.add_argument(
            "--ngon",
            type=int,
            default=None,
            help="Use the regular n-gon centered at 0",
        )

    def handle(self, *args, **options):
        document = run_guarded(lambda: check_document(options))
        self.stdout.write(dumps(document))
