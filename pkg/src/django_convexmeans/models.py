from __future__ import annotations

from django.db import models
from django.utils import timezone


class SearchRunStatus(models.TextChoices):
    """Status choices for threshold search runs."""

    PENDING = "pending", "Pending"
    RUNNING = "running", "Running"
    COMPLETED = "completed", "Completed"
    FAILED = "failed", "Failed"


class SampleSource(models.TextChoices):
    RANDOM = "random", "Random polygon"
    HOUSE = "house", "Random house"
    HILL_CLIMB = "hill_climb", "Hill-climb"


class SearchRun(models.Model):
    """
    Tracks threshold search runs.

    Stores the search parameters and, once finished, the largest asymmetry
    found among bodies satisfying the antipodal support condition.
    """

    run_id = models.CharField(
        max_length=255,
        unique=True,
        db_index=True,
        help_text="Unique identifier for this search run",
    )
    status = models.CharField(
        max_length=20,
        choices=SearchRunStatus.choices,
        default=SearchRunStatus.PENDING,
        help_text="Current status of the search run",
    )
    parameters = models.JSONField(
        default=dict,
        help_text="Seed, iterations and other search parameters",
    )
    best_asymmetry = models.FloatField(
        null=True,
        blank=True,
        help_text="Largest asymmetry among accepted samples",
    )
    best_vertices = models.JSONField(
        null=True,
        blank=True,
        help_text="Vertices of the best sample, Minkowski centered",
    )
    error_message = models.TextField(
        blank=True,
        default="",
        help_text="Error message if the search failed",
    )
    created_at = models.DateTimeField(
        auto_now_add=True,
        db_index=True,
        help_text="When the search run was created",
    )
    updated_at = models.DateTimeField(
        auto_now=True,
        help_text="When the search run was last updated",
    )
    completed_at = models.DateTimeField(
        null=True,
        blank=True,
        db_index=True,
        help_text="When the search run completed or failed",
    )

    class Meta:
        ordering = ["-created_at"]
        verbose_name = "Search Run"
        verbose_name_plural = "Search Runs"

    def __str__(self) -> str:
        return f"SearchRun({self.run_id}, {self.status})"


class SearchSample(models.Model):
    """An accepted sample of a search run."""

    search_run = models.ForeignKey(
        SearchRun,
        on_delete=models.CASCADE,
        related_name="samples",
        help_text="The search run this sample belongs to",
    )
    seed = models.BigIntegerField(help_text="Seed that produced the sample")
    source = models.CharField(
        max_length=20,
        choices=SampleSource.choices,
        help_text="Generator of the sample",
    )
    asymmetry = models.FloatField(help_text="Minkowski asymmetry s")
    vertices = models.JSONField(
        help_text="Vertices of the sample, Minkowski centered",
    )
    witness = models.JSONField(
        null=True,
        blank=True,
        help_text="Antipodal support witness, if any",
    )
    recorded_at = models.DateTimeField(
        default=timezone.now,
        help_text="When this sample was recorded",
    )

    class Meta:
        constraints = [
            models.UniqueConstraint(
                fields=["search_run", "seed", "source"],
                name="unique_search_run_seed_source",
            ),
        ]
        ordering = ["seed", "source"]
        verbose_name = "Search Sample"
        verbose_name_plural = "Search Samples"

    def __str__(self) -> str:
        return (
            f"SearchSample({self.search_run.run_id}, {self.seed}, "
            f"{self.source})"
        )
