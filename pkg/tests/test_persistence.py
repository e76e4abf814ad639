from __future__ import annotations

from django.test import TestCase

from django_convexmeans.golden.house import golden_house
from django_convexmeans.golden.search import SOURCE_HOUSE
from django_convexmeans.golden.search import SOURCE_RANDOM
from django_convexmeans.golden.search import sample_seed
from django_convexmeans.models import SearchRun
from django_convexmeans.models import SearchRunStatus
from django_convexmeans.models import SearchSample
from django_convexmeans.persistence import SearchPersistence


def _sample(seed=1, source=SOURCE_RANDOM, s=1.5):
    return {
        "seed": seed,
        "source": source,
        "s": s,
        "vertices": [[1.0, 0.0], [0.0, 1.0], [-1.0, -1.0]],
        "cond_iii_witness": None,
    }


class TestSearchPersistenceCreateRun(TestCase):
    """Tests for SearchPersistence.create_run()"""

    def test_create_run_with_parameters(self):
        run = SearchPersistence.create_run(
            run_id="search-1",
            parameters={"seed": 42, "iterations": 10},
        )

        self.assertEqual(run.run_id, "search-1")
        self.assertEqual(run.status, SearchRunStatus.PENDING)
        self.assertEqual(run.parameters, {"seed": 42, "iterations": 10})
        self.assertIsNone(run.best_asymmetry)
        self.assertIsNone(run.best_vertices)
        self.assertEqual(run.error_message, "")
        self.assertIsNone(run.completed_at)

    def test_create_run_without_parameters(self):
        """Parameters default to an empty dict."""
        run = SearchPersistence.create_run(run_id="search-2")

        self.assertEqual(run.parameters, {})

    def test_create_run_persists_to_database(self):
        SearchPersistence.create_run(run_id="search-3", parameters={"a": 1})

        run = SearchRun.objects.get(run_id="search-3")
        self.assertEqual(run.parameters, {"a": 1})


class TestSearchPersistenceGetRun(TestCase):
    def test_get_run_returns_existing_run(self):
        SearchPersistence.create_run(run_id="search-4")

        run = SearchPersistence.get_run("search-4")

        self.assertIsNotNone(run)
        self.assertEqual(run.run_id, "search-4")

    def test_get_run_returns_none_for_nonexistent_run(self):
        self.assertIsNone(SearchPersistence.get_run("missing"))


class TestSearchPersistenceRecordSample(TestCase):
    """Tests for SearchPersistence.record_sample()"""

    def setUp(self):
        SearchPersistence.create_run(run_id="search-5")

    def test_record_sample_creates_sample(self):
        sample = SearchPersistence.record_sample("search-5", _sample())

        self.assertIsNotNone(sample)
        self.assertEqual(sample.seed, 1)
        self.assertEqual(sample.source, SOURCE_RANDOM)
        self.assertEqual(sample.asymmetry, 1.5)
        self.assertIsNone(sample.witness)

    def test_record_sample_moves_run_to_running(self):
        SearchPersistence.record_sample("search-5", _sample())

        run = SearchRun.objects.get(run_id="search-5")
        self.assertEqual(run.status, SearchRunStatus.RUNNING)

    def test_record_sample_updates_existing_sample(self):
        SearchPersistence.record_sample("search-5", _sample(s=1.2))
        SearchPersistence.record_sample("search-5", _sample(s=1.4))

        samples = SearchSample.objects.filter(search_run__run_id="search-5")
        self.assertEqual(samples.count(), 1)
        self.assertEqual(samples.get().asymmetry, 1.4)

    def test_same_seed_different_source(self):
        SearchPersistence.record_sample("search-5", _sample())
        SearchPersistence.record_sample(
            "search-5", _sample(source=SOURCE_HOUSE)
        )

        samples = SearchPersistence.get_samples("search-5")
        self.assertEqual(
            [s.source for s in samples], [SOURCE_HOUSE, SOURCE_RANDOM]
        )

    def test_record_search_output(self):
        """Records produced by the sampler are stored as they are."""
        for record in sample_seed(7):
            SearchPersistence.record_sample("search-5", record.to_json())

        samples = SearchPersistence.get_samples("search-5")
        self.assertEqual(len(samples), 2)
        self.assertTrue(all(sample.seed == 7 for sample in samples))

    def test_record_sample_returns_none_for_nonexistent_run(self):
        result = SearchPersistence.record_sample("missing", _sample())

        self.assertIsNone(result)

    def test_get_samples_in_seed_order(self):
        for seed in (3, 1, 2):
            SearchPersistence.record_sample("search-5", _sample(seed=seed))

        samples = SearchPersistence.get_samples("search-5")
        self.assertEqual([s.seed for s in samples], [1, 2, 3])

    def test_get_samples_for_nonexistent_run(self):
        self.assertEqual(SearchPersistence.get_samples("missing"), [])


class TestSearchPersistenceMarkCompleted(TestCase):
    def test_mark_completed_updates_status(self):
        SearchPersistence.create_run(run_id="search-6")
        vertices = [v.to_float() for v in golden_house().vertices]

        run = SearchPersistence.mark_completed("search-6", 1.618, vertices)

        self.assertEqual(run.status, SearchRunStatus.COMPLETED)
        self.assertEqual(run.best_asymmetry, 1.618)
        self.assertIsNotNone(run.completed_at)

        stored = SearchRun.objects.get(run_id="search-6")
        self.assertEqual(stored.best_vertices, [list(v) for v in vertices])

    def test_mark_completed_without_accepted_samples(self):
        SearchPersistence.create_run(run_id="search-7")

        run = SearchPersistence.mark_completed("search-7", None)

        self.assertEqual(run.status, SearchRunStatus.COMPLETED)
        self.assertIsNone(run.best_asymmetry)

    def test_mark_completed_returns_none_for_nonexistent_run(self):
        self.assertIsNone(SearchPersistence.mark_completed("missing", 1.0))


class TestSearchPersistenceMarkFailed(TestCase):
    def test_mark_failed_updates_status(self):
        SearchPersistence.create_run(run_id="search-8")

        run = SearchPersistence.mark_failed("search-8", "LP pivot limit")

        self.assertEqual(run.status, SearchRunStatus.FAILED)
        self.assertEqual(run.error_message, "LP pivot limit")
        self.assertIsNotNone(run.completed_at)

    def test_mark_failed_returns_none_for_nonexistent_run(self):
        self.assertIsNone(SearchPersistence.mark_failed("missing", "error"))


class TestModels(TestCase):
    def test_search_run_str(self):
        run = SearchPersistence.create_run(run_id="search-9")

        self.assertEqual(str(run), "SearchRun(search-9, pending)")

    def test_search_sample_str(self):
        SearchPersistence.create_run(run_id="search-10")
        sample = SearchPersistence.record_sample("search-10", _sample(seed=4))

        self.assertEqual(str(sample), "SearchSample(search-10, 4, random)")

    def test_samples_deleted_with_run(self):
        SearchPersistence.create_run(run_id="search-11")
        SearchPersistence.record_sample("search-11", _sample())

        SearchRun.objects.filter(run_id="search-11").delete()

        self.assertEqual(SearchSample.objects.count(), 0)
