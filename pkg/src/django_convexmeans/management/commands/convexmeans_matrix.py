from __future__ import annotations

from typing import Any

import numpy as np
from django.core.management.base import BaseCommand

from django_convexmeans.management.utils import dumps
from django_convexmeans.management.utils import run_guarded
from django_convexmeans.matrices import ELLIPSE_TOLERANCE
from django_convexmeans.matrices import ellipsoid_mean_crosscheck
from django_convexmeans.matrices import random_spd
from django_convexmeans.matrices import run_matrix_trials


def ellipse_document(seed: int, lam: float) -> dict[str, Any]:
    rng = np.random.default_rng(seed)
    report = ellipsoid_mean_crosscheck(
        random_spd(rng, 2), random_spd(rng, 2), lam
    )
    return {
        "seed": seed,
        "lambda": lam,
        "harmonic_gap": report.harmonic_gap,
        "body_gap": report.body_gap,
        "arithmetic_gap": report.arithmetic_gap,
        "passed": report.holds(ELLIPSE_TOLERANCE),
    }


class Command(BaseCommand):
    help = "Check the matrix mean inequalities on random SPD pairs"

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int, default=2, help="Matrix size")
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--trials", type=int, default=100)
        parser.add_argument(
            "--ellipse",
            type=float,
            default=None,
            metavar="LAMBDA",
            help="Cross-check planar body means of ellipses at LAMBDA",
        )

    def handle(self, *args, **options):
        if options["ellipse"] is not None:
            document = run_guarded(
                lambda: ellipse_document(options["seed"], options["ellipse"])
            )
        else:
            document = run_guarded(
                lambda: run_matrix_trials(
                    options["n"], options["seed"], options["trials"]
                )
            )
        self.stdout.write(dumps(document))
