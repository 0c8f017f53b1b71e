import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clozegen.kb import (
    Taxonomy,
    TaxonomyError,
    UnknownConceptError,
    UnknownInstanceError,
    concepts_of,
    load_taxonomy,
    prior,
    sample_pos_matched,
    typicality,
)


class TestLoadTaxonomy:
    def test_three_line_tsv(self, tmp_path):
        path = tmp_path / "tax.tsv"
        path.write_text("animal\tdog\t10\nanimal\tcat\t8\npet\tdog\t5\n", encoding="utf-8")
        t = load_taxonomy(str(path))
        assert t.concepts == {"animal", "pet"}
        assert t.instances == {"dog", "cat"}
        assert len(t.edges) == 3

    def test_duplicate_edges_summed(self, tmp_path):
        path = tmp_path / "tax.tsv"
        path.write_text("animal\tdog\t10\nanimal\tdog\t10\n", encoding="utf-8")
        t = load_taxonomy(str(path))
        assert t.edges[("animal", "dog")] == 20

    def test_comments_and_bad_lines_skipped(self, tmp_path, caplog):
        path = tmp_path / "tax.tsv"
        path.write_text("# header\nanimal\tdog\t10\nanimal\tcat\t-3\nbroken line\n",
                        encoding="utf-8")
        with caplog.at_level("WARNING"):
            t = load_taxonomy(str(path))
        assert t.edges == {("animal", "dog"): 10}
        assert len(caplog.records) == 2

    def test_empty_taxonomy_fatal(self, tmp_path):
        path = tmp_path / "tax.tsv"
        path.write_text("# nothing here\n", encoding="utf-8")
        with pytest.raises(TaxonomyError, match="empty"):
            load_taxonomy(str(path))

    def test_hypernym_export_counts_and_pos(self, tmp_path):
        path = tmp_path / "export.tsv"
        path.write_text(
            "entity\tdog\t4\tNN\nentity\tcat\t0\tNN\nmotion\trun\t2\tVB\n",
            encoding="utf-8",
        )
        t = load_taxonomy(str(path), format="hypernym_export")
        # zero-frequency lemma floored to 1; others kept as provided
        assert t.edges == {("entity", "dog"): 4, ("entity", "cat"): 1, ("motion", "run"): 2}
        assert t.vocabulary_pos == {"dog": {"NN"}, "cat": {"NN"}, "run": {"VB"}}

    def test_labels_normalized(self):
        t = Taxonomy.from_edges({("  Big   Animal ", "DOG"): 3})
        assert t.edges == {("big animal", "dog"): 3}


class TestPrior:
    def test_unsmoothed_ratio(self, toy_taxonomy):
        assert prior(toy_taxonomy, "animal", "dog") == pytest.approx(10 / 15)

    def test_smoothed_values(self, toy_taxonomy):
        # direct formula: (10+1)/(15+2), (5+1)/(15+2)
        assert prior(toy_taxonomy, "animal", "dog", smoothing=1.0) == pytest.approx(11 / 17)
        assert prior(toy_taxonomy, "pet", "dog", smoothing=1.0) == pytest.approx(6 / 17)

    def test_single_concept_instance(self, toy_taxonomy):
        assert prior(toy_taxonomy, "vehicle", "car", smoothing=0.0) == 1.0
        assert prior(toy_taxonomy, "vehicle", "car", smoothing=5.0) == 1.0

    def test_unknown_instance_error(self, toy_taxonomy):
        with pytest.raises(UnknownInstanceError):
            prior(toy_taxonomy, "animal", "unicorn")

    @settings(max_examples=25, deadline=None)
    @given(alpha=st.floats(0, 10, allow_nan=False),
           counts=st.lists(st.integers(1, 50), min_size=1, max_size=6))
    def test_prior_sums_to_one(self, alpha, counts):
        t = Taxonomy.from_edges({(f"c{i}", "dog"): c for i, c in enumerate(counts)})
        total = sum(prior(t, c, "dog", alpha) for c in t.by_instance["dog"])
        assert total == pytest.approx(1.0, abs=1e-9)


class TestTypicality:
    def test_unsmoothed(self, toy_taxonomy):
        assert typicality(toy_taxonomy, "dog", "animal") == pytest.approx(10 / 22)

    def test_smoothed_two_instance_concept(self):
        t = Taxonomy.from_edges({("animal", "dog"): 10, ("animal", "cat"): 8})
        assert typicality(t, "dog", "animal", smoothing=1.0) == pytest.approx(11 / 20)
        assert typicality(t, "cat", "animal", smoothing=1.0) == pytest.approx(9 / 20)

    def test_single_instance_concept(self):
        t = Taxonomy.from_edges({("tool", "hammer"): 3})
        assert typicality(t, "hammer", "tool") == 1.0

    def test_unknown_concept_error(self, toy_taxonomy):
        with pytest.raises(UnknownConceptError):
            typicality(toy_taxonomy, "dog", "mineral")

    def test_sums_to_one(self, toy_taxonomy):
        total = sum(
            typicality(toy_taxonomy, d, "animal") for d in toy_taxonomy.by_concept["animal"]
        )
        assert total == pytest.approx(1.0, abs=1e-9)


class TestConceptsOf:
    def test_top_1(self, toy_taxonomy):
        assert concepts_of(toy_taxonomy, "dog", 1) == [("animal", pytest.approx(10 / 15))]

    def test_truncation_to_available(self, toy_taxonomy):
        assert len(concepts_of(toy_taxonomy, "dog", 20)) == 2

    def test_tie_breaks_lexicographically(self):
        t = Taxonomy.from_edges({("b", "x"): 5, ("a", "x"): 5})
        assert [c for c, _ in concepts_of(t, "x", 2)] == ["a", "b"]

    def test_unknown_instance_empty(self, toy_taxonomy):
        assert concepts_of(toy_taxonomy, "unicorn", 5) == []

    def test_descending_and_deterministic(self, toy_taxonomy):
        result = concepts_of(toy_taxonomy, "cat", 10)
        priors = [p for _, p in result]
        assert priors == sorted(priors, reverse=True)
        assert result == concepts_of(toy_taxonomy, "cat", 10)


class TestSamplePosMatched:
    def test_samples_distinct_matching(self, toy_taxonomy):
        result = sample_pos_matched(toy_taxonomy, "NN", 2, seed=1)
        assert len(result) == len(set(result)) == 2
        assert all(r in toy_taxonomy.vocabulary_pos for r in result)

    def test_exclusion_covers_all(self, toy_taxonomy):
        exclude = set(toy_taxonomy.vocabulary_pos)
        assert sample_pos_matched(toy_taxonomy, "NN", 3, seed=1, exclude=exclude) == []

    def test_deterministic_per_seed(self, toy_taxonomy):
        a = sample_pos_matched(toy_taxonomy, "NN", 3, seed=42)
        b = sample_pos_matched(toy_taxonomy, "NN", 3, seed=42)
        assert a == b

    def test_fewer_matches_than_n(self, toy_taxonomy):
        assert sample_pos_matched(toy_taxonomy, "VB", 10, seed=0) == ["run"]

    def test_no_pos_index_error(self):
        t = Taxonomy.from_edges({("animal", "dog"): 1})
        with pytest.raises(TaxonomyError, match="POS index"):
            sample_pos_matched(t, "NN", 2, seed=0)
