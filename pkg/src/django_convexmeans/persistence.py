from __future__ import annotations

import logging
from typing import Any

from django.db import transaction
from django.utils import timezone

from .models import SearchRun
from .models import SearchRunStatus
from .models import SearchSample

logger = logging.getLogger(__name__)


class SearchPersistence:
    """
    Persistence utilities for threshold search runs.

    Samples are recorded as the search streams them, so an interrupted
    run keeps everything evaluated so far.
    """

    @staticmethod
    def create_run(
        run_id: str,
        parameters: dict[str, Any] | None = None,
    ) -> SearchRun:
        """
        Create a new search run record.

        Args:
            run_id: Unique identifier for this search run
            parameters: Seed, iterations and other search parameters

        Returns:
            The created SearchRun instance
        """
        if parameters is None:
            parameters = {}

        search_run = SearchRun.objects.create(
            run_id=run_id,
            status=SearchRunStatus.PENDING,
            parameters=parameters,
        )
        logger.debug("Created search run: run_id=%s", run_id)
        return search_run

    @staticmethod
    def get_run(run_id: str) -> SearchRun | None:
        try:
            return SearchRun.objects.get(run_id=run_id)
        except SearchRun.DoesNotExist:
            return None

    @staticmethod
    def get_samples(run_id: str) -> list[SearchSample]:
        """Samples of a run in seed order, empty for unknown runs."""
        return list(
            SearchSample.objects.filter(search_run__run_id=run_id).order_by(
                "seed", "source"
            )
        )

    @staticmethod
    @transaction.atomic
    def record_sample(
        run_id: str,
        sample: dict[str, Any],
    ) -> SearchSample | None:
        """
        Save one accepted sample of a search run.

        Uses select_for_update to serialize writers of the same run.

        Args:
            run_id: The unique identifier for the search run
            sample: A search record as produced by ``SampleRecord.to_json``

        Returns:
            The created or updated SearchSample, or None if the run was
            not found
        """
        try:
            search_run = SearchRun.objects.select_for_update().get(
                run_id=run_id
            )
        except SearchRun.DoesNotExist:
            logger.warning(
                "Cannot record sample: search run not found: run_id=%s",
                run_id,
            )
            return None

        if search_run.status == SearchRunStatus.PENDING:
            search_run.status = SearchRunStatus.RUNNING
            search_run.save(update_fields=["status", "updated_at"])

        search_sample, created = SearchSample.objects.update_or_create(
            search_run=search_run,
            seed=sample["seed"],
            source=sample["source"],
            defaults={
                "asymmetry": sample["s"],
                "vertices": sample["vertices"],
                "witness": sample.get("cond_iii_witness"),
                "recorded_at": timezone.now(),
            },
        )

        action = "Created" if created else "Updated"
        logger.debug(
            "%s search sample: run_id=%s, seed=%s, source=%s",
            action,
            run_id,
            sample["seed"],
            sample["source"],
        )
        return search_sample

    @staticmethod
    @transaction.atomic
    def mark_completed(
        run_id: str,
        best_asymmetry: float | None,
        best_vertices: Any = None,
    ) -> SearchRun | None:
        """
        Mark a search run as completed with its best sample.

        Returns:
            The updated SearchRun instance, or None if not found
        """
        try:
            search_run = SearchRun.objects.select_for_update().get(
                run_id=run_id
            )
        except SearchRun.DoesNotExist:
            logger.warning(
                "Cannot mark completed: search run not found: run_id=%s",
                run_id,
            )
            return None

        search_run.status = SearchRunStatus.COMPLETED
        search_run.best_asymmetry = best_asymmetry
        search_run.best_vertices = best_vertices
        search_run.completed_at = timezone.now()
        search_run.save(
            update_fields=[
                "status",
                "best_asymmetry",
                "best_vertices",
                "completed_at",
                "updated_at",
            ]
        )

        logger.info(
            "Search run completed: run_id=%s, best s=%s",
            run_id,
            best_asymmetry,
        )
        return search_run

    @staticmethod
    @transaction.atomic
    def mark_failed(run_id: str, error_message: str) -> SearchRun | None:
        """
        Mark a search run as failed.

        Returns:
            The updated SearchRun instance, or None if not found
        """
        try:
            search_run = SearchRun.objects.select_for_update().get(
                run_id=run_id
            )
        except SearchRun.DoesNotExist:
            logger.warning(
                "Cannot mark failed: search run not found: run_id=%s",
                run_id,
            )
            return None

        search_run.status = SearchRunStatus.FAILED
        search_run.error_message = error_message
        search_run.completed_at = timezone.now()
        search_run.save(
            update_fields=[
                "status",
                "error_message",
                "completed_at",
                "updated_at",
            ]
        )

        logger.info(
            "Search run failed: run_id=%s, error=%s",
            run_id,
            error_message,
        )
        return search_run
