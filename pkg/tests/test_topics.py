import numpy as np
import pytest

from clozegen.kb import Taxonomy, UnknownConceptError
from clozegen.topics import (
    TopicModel,
    TopicModelError,
    concept_topic_distribution,
    infer_topics,
    load_topic_model,
    perplexity,
    save_topic_model,
    topic_tokenize,
    train_lda,
    uniform_topic_model,
)

TWO_TOPIC_DOCS = [["apple", "banana"] * 15, ["xylophone", "yacht"] * 15]


def corpus_unigram(docs, vocab, beta):
    counts = {w: 0 for w in vocab}
    for doc in docs:
        for tok in doc:
            counts[tok] += 1
    total = sum(counts.values())
    return [(counts[w] + beta) / (total + len(vocab) * beta) for w in vocab]


class TestTrainLda:
    def test_single_topic_equals_smoothed_unigram(self):
        docs = [["cat", "dog", "dog"], ["dog", "bird"]]
        model = train_lda(docs, K=1, beta=0.5, iterations=5, seed=0)
        expected = corpus_unigram(docs, model.vocabulary, 0.5)
        assert model.topic_word[0].tolist() == pytest.approx(expected, abs=1e-12)

    def test_disjoint_vocabulary_topics_separate(self):
        satisfied = 0
        for seed in range(5):
            model = train_lda(TWO_TOPIC_DOCS, K=2, alpha=0.1, beta=0.01,
                              iterations=200, seed=seed)
            first = [model.word_index["apple"], model.word_index["banana"]]
            second = [model.word_index["xylophone"], model.word_index["yacht"]]
            masses = model.topic_word[:, first].sum(axis=1)
            # one topic owns >=0.9 of doc-1 vocabulary, the other of doc-2
            if (max(masses) >= 0.9
                    and model.topic_word[int(np.argmin(masses)), second].sum() >= 0.9):
                satisfied += 1
        assert satisfied >= 4

    def test_deterministic_per_seed(self):
        a = train_lda(TWO_TOPIC_DOCS, K=2, iterations=30, seed=11)
        b = train_lda(TWO_TOPIC_DOCS, K=2, iterations=30, seed=11)
        assert np.array_equal(a.topic_word, b.topic_word)

    def test_rows_sum_to_one(self):
        model = train_lda(TWO_TOPIC_DOCS, K=3, iterations=20, seed=2)
        assert np.allclose(model.topic_word.sum(axis=1), 1.0, atol=1e-6)
        assert np.all(model.topic_word > 0)

    def test_empty_vocabulary_error(self):
        with pytest.raises(TopicModelError, match="vocabulary"):
            train_lda([[], []], K=2, iterations=5, seed=0)

    def test_too_few_docs_error(self):
        with pytest.raises(TopicModelError, match="2 documents"):
            train_lda([["a"]], K=1, iterations=5, seed=0)

    def test_bad_k_and_iterations(self):
        with pytest.raises(TopicModelError):
            train_lda(TWO_TOPIC_DOCS, K=0, iterations=5, seed=0)
        with pytest.raises(TopicModelError):
            train_lda(TWO_TOPIC_DOCS, K=2, iterations=0, seed=0)


class TestInferTopics:
    def test_k1_returns_unit(self):
        model = train_lda([["a", "b"], ["b", "c"]], K=1, iterations=5, seed=0)
        assert infer_topics(model, ["a"]).weights.tolist() == [1.0]

    def test_all_oov_uniform(self):
        model = train_lda(TWO_TOPIC_DOCS, K=2, iterations=20, seed=0)
        assert infer_topics(model, ["zzz", "qqq"]).weights.tolist() == [0.5, 0.5]

    def test_exclusive_words_pick_their_topic(self):
        model = train_lda(TWO_TOPIC_DOCS, K=2, alpha=0.1, beta=0.01,
                          iterations=200, seed=1)
        first = int(np.argmax(infer_topics(model, ["apple", "banana", "apple"]).weights))
        second = int(np.argmax(infer_topics(model, ["xylophone", "yacht"]).weights))
        assert first != second
        assert model.topic_word[first, model.word_index["apple"]] > \
            model.topic_word[second, model.word_index["apple"]]

    def test_deterministic(self):
        model = train_lda(TWO_TOPIC_DOCS, K=2, iterations=20, seed=0)
        a = infer_topics(model, ["apple", "yacht"], seed=5)
        b = infer_topics(model, ["apple", "yacht"], seed=5)
        assert np.array_equal(a.weights, b.weights)

    def test_distribution_sums_to_one(self):
        model = train_lda(TWO_TOPIC_DOCS, K=4, iterations=20, seed=0)
        weights = infer_topics(model, ["apple", "banana", "xylophone"]).weights
        assert weights.sum() == pytest.approx(1.0, abs=1e-6)
        assert np.all(weights >= 0)


class TestConceptTopicDistribution:
    def test_single_instance_k1(self):
        model = train_lda([["dog"], ["dog", "dog"]], K=1, iterations=5, seed=0)
        t = Taxonomy.from_edges({("canine", "dog"): 3})
        dist = concept_topic_distribution(model, t, "canine")
        assert dist.weights.tolist() == [1.0]

    def test_toy_concepts_argmax_differ(self):
        model = train_lda(TWO_TOPIC_DOCS, K=2, alpha=0.1, beta=0.01,
                          iterations=200, seed=3)
        t = Taxonomy.from_edges({
            ("fruit", "apple"): 5,
            ("fruit", "banana"): 4,
            ("boat", "yacht"): 5,
            ("boat", "xylophone"): 4,
        })
        fruit = concept_topic_distribution(model, t, "fruit")
        boat = concept_topic_distribution(model, t, "boat")
        assert int(np.argmax(fruit.weights)) != int(np.argmax(boat.weights))

    def test_zero_instances_uses_bare_label(self):
        model = train_lda(TWO_TOPIC_DOCS, K=2, iterations=20, seed=0)
        t = Taxonomy.from_edges({("apple", "banana"): 1})
        with_label = concept_topic_distribution(model, t, "apple", top_instances=0)
        expected = infer_topics(model, ["apple"])
        assert np.array_equal(with_label.weights, expected.weights)

    def test_unknown_concept_error(self, toy_taxonomy):
        model = train_lda(TWO_TOPIC_DOCS, K=2, iterations=5, seed=0)
        with pytest.raises(UnknownConceptError):
            concept_topic_distribution(model, toy_taxonomy, "mineral")


class TestPerplexityAndIO:
    def test_trained_beats_uniform(self):
        model = train_lda(TWO_TOPIC_DOCS, K=2, alpha=0.1, beta=0.01,
                          iterations=150, seed=0)
        uniform = uniform_topic_model(2, model.vocabulary, alpha=0.1)
        assert perplexity(model, TWO_TOPIC_DOCS) <= perplexity(uniform, TWO_TOPIC_DOCS)

    def test_save_load_roundtrip(self, tmp_path):
        model = train_lda(TWO_TOPIC_DOCS, K=2, iterations=20, seed=0)
        path = tmp_path / "model.json"
        save_topic_model(model, str(path))
        loaded = load_topic_model(str(path))
        assert loaded.K == model.K
        assert loaded.vocabulary == model.vocabulary
        assert np.array_equal(loaded.topic_word, model.topic_word)

    def test_save_is_byte_deterministic(self, tmp_path):
        model = train_lda(TWO_TOPIC_DOCS, K=2, iterations=20, seed=0)
        p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
        save_topic_model(model, str(p1))
        save_topic_model(model, str(p2))
        assert p1.read_bytes() == p2.read_bytes()


def test_topic_tokenize_rules():
    assert topic_tokenize("The cat, the CAT!") == ["the", "cat", "the", "cat"]
    assert topic_tokenize("a b c") == []  # single-char tokens dropped
