from __future__ import annotations

from unittest import mock

from django.apps import apps
from django.core.exceptions import ImproperlyConfigured
from django.test import SimpleTestCase
from django.test import override_settings

from django_convexmeans.apps import check_convexmeans_migrations
from django_convexmeans.apps import check_convexmeans_settings
from django_convexmeans.apps import find_setting_problems
from django_convexmeans.conf import DEFAULT_FIGURE_COLORS
from django_convexmeans.conf import get_figure_colors
from django_convexmeans.conf import get_float_tolerance
from django_convexmeans.conf import get_lp_max_pivots
from django_convexmeans.conf import get_search_workers
from django_convexmeans.conf import is_persistence_enabled


class _Unconfigured:
    def __getattr__(self, name):
        raise ImproperlyConfigured(name)


def _ids():
    return [message.id for message in check_convexmeans_settings(None)]


class TestSystemChecks(SimpleTestCase):
    def test_test_settings_pass(self):
        self.assertEqual(_ids(), [])

    @override_settings(CONVEXMEANS_FLOAT_TOLERANCE=0.5)
    def test_tolerance_too_large(self):
        self.assertEqual(_ids(), ["django_convexmeans.E001"])

    @override_settings(CONVEXMEANS_FLOAT_TOLERANCE=0)
    def test_tolerance_not_a_float(self):
        self.assertEqual(_ids(), ["django_convexmeans.E001"])

    @override_settings(CONVEXMEANS_DEFAULT_BACKEND="decimal")
    def test_unknown_backend(self):
        self.assertEqual(_ids(), ["django_convexmeans.E002"])

    @override_settings(CONVEXMEANS_SEARCH_WORKERS=True)
    def test_workers_bool(self):
        self.assertEqual(_ids(), ["django_convexmeans.E003"])

    @override_settings(CONVEXMEANS_LP_MAX_PIVOTS=-5)
    def test_pivots_negative(self):
        self.assertEqual(_ids(), ["django_convexmeans.E004"])

    @override_settings(CONVEXMEANS_FIGURE_COLORS=["red"])
    def test_colors_warning(self):
        messages = check_convexmeans_settings(None)
        self.assertEqual(len(messages), 1)
        self.assertEqual(messages[0].id, "django_convexmeans.W001")
        self.assertFalse(messages[0].is_serious())


class TestStartupValidation(SimpleTestCase):
    def _ready(self):
        apps.get_app_config("django_convexmeans").ready()

    @override_settings(
        CONVEXMEANS_LP_MAX_PIVOTS=-5, CONVEXMEANS_FIGURE_COLORS=["red"]
    )
    def test_logs_what_the_checks_report(self):
        with self.assertLogs("django_convexmeans.apps", "WARNING") as logs:
            self._ready()
        self.assertEqual(len(logs.output), 2)
        self.assertIn("CONVEXMEANS_LP_MAX_PIVOTS", logs.output[0])
        self.assertIn("CONVEXMEANS_FIGURE_COLORS", logs.output[1])
        self.assertEqual(
            _ids(), ["django_convexmeans.E004", "django_convexmeans.W001"]
        )

    @override_settings(
        CONVEXMEANS_FLOAT_TOLERANCE=0.5,
        CONVEXMEANS_DEFAULT_BACKEND="decimal",
        CONVEXMEANS_SEARCH_WORKERS=0,
        CONVEXMEANS_LP_MAX_PIVOTS="many",
        CONVEXMEANS_FIGURE_COLORS={"body": 1},
    )
    def test_every_setting_is_validated_once(self):
        problems = find_setting_problems()
        self.assertEqual(
            [problem.id for problem in problems],
            _ids(),
        )
        self.assertEqual(len({problem.setting for problem in problems}), 5)

    def test_ready_does_not_query_the_database(self):
        with mock.patch(
            "django_convexmeans.apps._migrations_pending"
        ) as pending:
            self._ready()
        pending.assert_not_called()


class TestMigrationCheck(SimpleTestCase):
    def test_skipped_without_databases(self):
        with mock.patch(
            "django_convexmeans.apps._migrations_pending"
        ) as pending:
            self.assertEqual(check_convexmeans_migrations(None), [])
        pending.assert_not_called()

    def test_pending_migrations_warn(self):
        with mock.patch(
            "django_convexmeans.apps._migrations_pending", return_value=True
        ):
            messages = check_convexmeans_migrations(
                None, databases=["default"]
            )
        self.assertEqual(
            [message.id for message in messages],
            ["django_convexmeans.W002"],
        )

    def test_applied_migrations_pass(self):
        with mock.patch(
            "django_convexmeans.apps._migrations_pending", return_value=False
        ):
            self.assertEqual(
                check_convexmeans_migrations(None, databases=["default"]), []
            )


class TestSettingsAccessors(SimpleTestCase):
    def test_configured_values(self):
        self.assertEqual(get_float_tolerance(), 1e-9)
        self.assertFalse(is_persistence_enabled())

    def test_defaults(self):
        self.assertEqual(get_search_workers(), 1)
        self.assertEqual(get_lp_max_pivots(), 10000)
        self.assertEqual(get_figure_colors(), DEFAULT_FIGURE_COLORS)

    @override_settings(CONVEXMEANS_FIGURE_COLORS=["red"])
    def test_invalid_colors_fall_back(self):
        self.assertEqual(get_figure_colors(), DEFAULT_FIGURE_COLORS)

    def test_outside_a_configured_project(self):
        with mock.patch("django_convexmeans.conf.settings", _Unconfigured()):
            self.assertEqual(get_float_tolerance(), 1e-9)
            self.assertEqual(get_lp_max_pivots(), 10000)
