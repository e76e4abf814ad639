# Generated by Django 5.2 on 2026-10-12 09:14

from __future__ import annotations

import django.db.models.deletion
import django.utils.timezone
from django.db import migrations
from django.db import models


class Migration(migrations.Migration):
    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="SearchRun",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                (
                    "run_id",
                    models.CharField(
                        db_index=True,
                        help_text="Unique identifier for this search run",
                        max_length=255,
                        unique=True,
                    ),
                ),
                (
                    "status",
                    models.CharField(
                        choices=[
                            ("pending", "Pending"),
                            ("running", "Running"),
                            ("completed", "Completed"),
                            ("failed", "Failed"),
                        ],
                        default="pending",
                        help_text="Current status of the search run",
                        max_length=20,
                    ),
                ),
                (
                    "parameters",
                    models.JSONField(
                        default=dict,
                        help_text="Seed, iterations and other search "
                        "parameters",
                    ),
                ),
                (
                    "best_asymmetry",
                    models.FloatField(
                        blank=True,
                        help_text="Largest asymmetry among accepted samples",
                        null=True,
                    ),
                ),
                (
                    "best_vertices",
                    models.JSONField(
                        blank=True,
                        help_text="Vertices of the best sample, Minkowski "
                        "centered",
                        null=True,
                    ),
                ),
                (
                    "error_message",
                    models.TextField(
                        blank=True,
                        default="",
                        help_text="Error message if the search failed",
                    ),
                ),
                (
                    "created_at",
                    models.DateTimeField(
                        auto_now_add=True,
                        db_index=True,
                        help_text="When the search run was created",
                    ),
                ),
                (
                    "updated_at",
                    models.DateTimeField(
                        auto_now=True,
                        help_text="When the search run was last updated",
                    ),
                ),
                (
                    "completed_at",
                    models.DateTimeField(
                        blank=True,
                        db_index=True,
                        help_text="When the search run completed or failed",
                        null=True,
                    ),
                ),
            ],
            options={
                "verbose_name": "Search Run",
                "verbose_name_plural": "Search Runs",
                "ordering": ["-created_at"],
            },
        ),
        migrations.CreateModel(
            name="SearchSample",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                (
                    "seed",
                    models.BigIntegerField(
                        help_text="Seed that produced the sample"
                    ),
                ),
                (
                    "source",
                    models.CharField(
                        choices=[
                            ("random", "Random polygon"),
                            ("house", "Random house"),
                            ("hill_climb", "Hill-climb"),
                        ],
                        help_text="Generator of the sample",
                        max_length=20,
                    ),
                ),
                (
                    "asymmetry",
                    models.FloatField(help_text="Minkowski asymmetry s"),
                ),
                (
                    "vertices",
                    models.JSONField(
                        help_text="Vertices of the sample, Minkowski centered"
                    ),
                ),
                (
                    "witness",
                    models.JSONField(
                        blank=True,
                        help_text="Antipodal support witness, if any",
                        null=True,
                    ),
                ),
                (
                    "recorded_at",
                    models.DateTimeField(
                        default=django.utils.timezone.now,
                        help_text="When this sample was recorded",
                    ),
                ),
                (
                    "search_run",
                    models.ForeignKey(
                        help_text="The search run this sample belongs to",
                        on_delete=django.db.models.deletion.CASCADE,
                        related_name="samples",
                        to="django_convexmeans.searchrun",
                    ),
                ),
            ],
            options={
                "verbose_name": "Search Sample",
                "verbose_name_plural": "Search Samples",
                "ordering": ["seed", "source"],
                "constraints": [
                    models.UniqueConstraint(
                        fields=("search_run", "seed", "source"),
                        name="unique_search_run_seed_source",
                    )
                ],
            },
        ),
    ]
