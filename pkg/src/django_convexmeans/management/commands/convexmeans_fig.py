from __future__ import annotations

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from django_convexmeans.figures import FIGURE_NAMES
from django_convexmeans.figures import build_figure
from django_convexmeans.figures import render_svg
from django_convexmeans.figures import write_figure
from django_convexmeans.management.utils import run_guarded


class Command(BaseCommand):
    """
    Render a figure as SVG.

    ``gh`` draws the golden house with -phi GH and the supports x = +-1,
    ``gh-symm`` its four symmetrizations and ``family TAU`` a re-centered
    hexagon of the family with its -s C overlay.
    """

    help = "Render golden house figures as SVG"

    def add_arguments(self, parser):
        parser.add_argument("name", choices=FIGURE_NAMES)
        parser.add_argument(
            "tau",
            nargs="?",
            default=None,
            help="Family parameter in [1, phi^2], e.g. 2 or 3/2",
        )
        parser.add_argument(
            "--output",
            "-o",
            default=None,
            help="SVG file to write (default: stdout)",
        )

    def handle(self, *args, **options):
        spec = run_guarded(
            lambda: build_figure(options["name"], options["tau"])
        )
        if options["output"] is None:
            self.stdout.write(render_svg(spec), ending="")
            return
        try:
            write_figure(spec, options["output"])
        except OSError as e:
            raise CommandError(f"Cannot write {options['output']}: {e}")
        self.stdout.write(
            self.style.SUCCESS(f"Figure written to {options['output']}")
        )
