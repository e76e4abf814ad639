from __future__ import annotations

from django.contrib import admin

from .models import SearchRun
from .models import SearchSample


class SearchSampleInline(admin.TabularInline):
    """Inline display of samples within a search run."""

    model = SearchSample
    extra = 0
    readonly_fields = ("seed", "source", "asymmetry", "recorded_at")
    fields = readonly_fields
    can_delete = False

    def has_add_permission(self, request, obj=None):
        return False


@admin.register(SearchRun)
class SearchRunAdmin(admin.ModelAdmin):
    """Admin interface for threshold search runs."""

    list_display = (
        "run_id",
        "status",
        "best_asymmetry",
        "created_at",
        "completed_at",
    )
    list_filter = ("status", "created_at")
    search_fields = ("run_id",)
    readonly_fields = (
        "run_id",
        "status",
        "parameters",
        "best_asymmetry",
        "best_vertices",
        "error_message",
        "created_at",
        "updated_at",
        "completed_at",
    )
    ordering = ("-created_at",)
    date_hierarchy = "created_at"
    inlines = [SearchSampleInline]

    fieldsets = (
        (None, {"fields": ("run_id", "status", "parameters")}),
        (
            "Result",
            {"fields": ("best_asymmetry", "best_vertices", "error_message")},
        ),
        (
            "Timestamps",
            {"fields": ("created_at", "updated_at", "completed_at")},
        ),
    )

    def has_add_permission(self, request):
        return False

    def has_change_permission(self, request, obj=None):
        return False


@admin.register(SearchSample)
class SearchSampleAdmin(admin.ModelAdmin):
    """Admin interface for search samples."""

    list_display = ("search_run", "seed", "source", "asymmetry")
    list_filter = ("source",)
    search_fields = ("search_run__run_id",)
    readonly_fields = (
        "search_run",
        "seed",
        "source",
        "asymmetry",
        "vertices",
        "witness",
        "recorded_at",
    )
    ordering = ("-asymmetry",)

    def has_add_permission(self, request):
        return False

    def has_change_permission(self, request, obj=None):
        return False
