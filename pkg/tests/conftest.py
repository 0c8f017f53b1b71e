import numpy as np
import pytest

from clozegen.features.resources import FeatureResources
from clozegen.features.tagging import LexiconTagger
from clozegen.kb import Taxonomy
from clozegen.topics import TopicModel


def pytest_runtest_logreport(report):
    # One visible pass/fail line per acceptance criterion.
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    print(f"\n[acceptance] {name}: {status}")


@pytest.fixture
def toy_taxonomy() -> Taxonomy:
    return Taxonomy.from_edges(
        {
            ("animal", "dog"): 10,
            ("animal", "cat"): 8,
            ("animal", "horse"): 4,
            ("pet", "dog"): 5,
            ("pet", "cat"): 6,
            ("pet", "hamster"): 2,
            ("vehicle", "car"): 9,
            ("vehicle", "bus"): 3,
        },
        vocabulary_pos={
            "dog": {"NN"},
            "cat": {"NN"},
            "horse": {"NN"},
            "hamster": {"NN"},
            "car": {"NN"},
            "bus": {"NN"},
            "run": {"VB"},
        },
    )


@pytest.fixture
def single_topic_model() -> TopicModel:
    vocab = ["animal", "bus", "car", "cat", "dog", "hamster", "horse", "pet", "vehicle"]
    return TopicModel(
        K=1,
        vocabulary=vocab,
        topic_word=np.full((1, len(vocab)), 1.0 / len(vocab)),
        alpha=50.0,
        beta=0.01,
    )


@pytest.fixture
def toy_embeddings() -> dict[str, np.ndarray]:
    return {
        "dog": np.array([1.0, 0.1, 0.0]),
        "cat": np.array([0.9, 0.2, 0.0]),
        "horse": np.array([0.8, 0.3, 0.1]),
        "hamster": np.array([0.7, 0.2, 0.2]),
        "car": np.array([0.0, 1.0, 0.1]),
        "bus": np.array([0.1, 0.9, 0.0]),
        "protein": np.array([0.2, 0.2, 1.0]),
        "fat": np.array([0.3, 0.1, 0.9]),
        "the": np.array([0.3, 0.3, 0.3]),
        "is": np.array([0.2, 0.3, 0.4]),
    }


@pytest.fixture
def basic_resources(toy_embeddings) -> FeatureResources:
    return FeatureResources(
        embeddings=toy_embeddings,
        frequencies={"dog": 100, "cat": 80, "the": 1000, "protein": 10},
        tagger=LexiconTagger(),
    )
