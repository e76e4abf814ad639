from __future__ import annotations

import json
import uuid

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError

from django_convexmeans.conf import is_persistence_enabled
from django_convexmeans.golden.search import SampleRecord
from django_convexmeans.golden.search import threshold_search
from django_convexmeans.management.utils import dumps
from django_convexmeans.management.utils import run_guarded
from django_convexmeans.persistence import SearchPersistence


class Command(BaseCommand):
    """
    Stream threshold search samples as JSON lines.

    Every accepted sample is written as one line in seed order; the final
    summary goes to stderr. With persistence enabled the run and its
    samples are also stored in the database.
    """

    help = "Search for large asymmetry among bodies with antipodal supports"

    def add_arguments(self, parser):
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--iterations", type=int, default=100)
        parser.add_argument(
            "--hill-climbs",
            type=int,
            default=0,
            help="Hill-climbing runs from perturbed golden houses",
        )
        parser.add_argument(
            "--min-vertices",
            type=int,
            default=5,
            help="Smallest number of vertices of annulus samples",
        )
        parser.add_argument(
            "--max-vertices",
            type=int,
            default=12,
            help="Largest number of vertices of annulus samples",
        )
        parser.add_argument(
            "--no-filter",
            action="store_true",
            help="Keep samples without antipodal supports as well",
        )
        parser.add_argument(
            "--workers",
            type=int,
            default=None,
            help="Worker processes (default: CONVEXMEANS_SEARCH_WORKERS)",
        )
        parser.add_argument(
            "--output",
            default=None,
            help="Write JSON lines to this file instead of stdout",
        )
        parser.add_argument(
            "--run-id",
            default=None,
            help="Identifier of the persisted run (default: random)",
        )
        parser.add_argument(
            "--no-persist",
            action="store_true",
            help="Do not store the run in the database",
        )

    def handle(self, *args, **options):
        if options["iterations"] < 0 or options["hill_climbs"] < 0:
            raise CommandError("--iterations and --hill-climbs must be >= 0")
        if options["min_vertices"] > options["max_vertices"]:
            raise CommandError("--min-vertices exceeds --max-vertices")

        persist = is_persistence_enabled() and not options["no_persist"]
        run_id = options["run_id"] or f"search-{uuid.uuid4().hex}"
        parameters = {
            "seed": options["seed"],
            "iterations": options["iterations"],
            "hill_climbs": options["hill_climbs"],
            "vertex_range": [options["min_vertices"], options["max_vertices"]],
            "require_condition": not options["no_filter"],
        }
        if persist:
            SearchPersistence.create_run(run_id, parameters)

        stream = self.stdout
        handle = None
        if options["output"]:
            try:
                handle = open(options["output"], "w", encoding="utf-8")
            except OSError as e:
                raise CommandError(f"Cannot write {options['output']}: {e}")
            stream = handle

        def on_record(record: SampleRecord) -> None:
            document = record.to_json()
            stream.write(json.dumps(document, sort_keys=True) + "\n")
            if persist:
                SearchPersistence.record_sample(run_id, document)

        try:
            outcome = run_guarded(
                lambda: threshold_search(
                    seed=options["seed"],
                    iterations=options["iterations"],
                    vertex_range=(
                        options["min_vertices"],
                        options["max_vertices"],
                    ),
                    require_condition=not options["no_filter"],
                    hill_climbs=options["hill_climbs"],
                    workers=options["workers"],
                    on_record=on_record,
                )
            )
        except CommandError as e:
            if persist:
                SearchPersistence.mark_failed(run_id, str(e))
            raise
        finally:
            if handle is not None:
                handle.close()

        best = outcome.best.to_json() if outcome.best else None
        if persist:
            SearchPersistence.mark_completed(
                run_id,
                outcome.max_s if best else None,
                best["vertices"] if best else None,
            )
        summary = {
            "run_id": run_id if persist else None,
            "evaluated": outcome.evaluated,
            "accepted": outcome.accepted,
            "max_s": outcome.max_s if best else None,
            "best_seed": best["seed"] if best else None,
            "best_source": best["source"] if best else None,
        }
        self.stderr.write(dumps(summary))
