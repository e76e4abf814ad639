from __future__ import annotations

from django.core.management.base import BaseCommand

from django_convexmeans.fixtures3d import chain_optimality_3d
from django_convexmeans.geometry.scalar import EXACT
from django_convexmeans.management.utils import dumps
from django_convexmeans.management.utils import run_guarded


class Command(BaseCommand):
    """
    Print the minimal homotheties along the 3D means chain of a simplex.

    One line per inclusion, e.g. ``cross_polytope in cube: rho=1``, then
    the asymmetry of the simplex.
    """

    help = "Check optimal containment along the means chain of a 3-simplex"

    def add_arguments(self, parser):
        parser.add_argument(
            "--json",
            action="store_true",
            help="Print the report as JSON",
        )

    def handle(self, *args, **options):
        report = run_guarded(chain_optimality_3d)
        if options["json"]:
            self.stdout.write(dumps(report.to_json()))
            return
        for line in report.lines:
            self.stdout.write(
                f"{line.inner} in {line.outer}: "
                f"rho={EXACT.coerce(line.rho).short()}"
            )
        asymmetry = EXACT.coerce(report.simplex_asymmetry).short()
        self.stdout.write(f"simplex asymmetry: {asymmetry}")
