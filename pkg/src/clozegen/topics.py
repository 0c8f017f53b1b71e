"""K-topic LDA trained by collapsed Gibbs sampling, with fold-in inference.

Sentence topic distributions and concept topic distributions both come out
of the same fold-in routine; a concept's distribution is inferred over a
pseudo-document built from its label and its most typical instances.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

import numpy as np

from .kb import Taxonomy, UnknownConceptError, typicality

MODEL_FORMAT_VERSION = 1

_WORD_RE = re.compile(r"[0-9a-zÀ-￿]+")


class TopicModelError(ValueError):
    pass


def topic_tokenize(text: str) -> list[str]:
    """Lowercase, split on non-alphanumeric, drop tokens shorter than 2 chars."""
    return [t for t in _WORD_RE.findall(text.lower()) if len(t) >= 2]


@dataclass
class TopicModel:
    K: int
    vocabulary: list[str]
    topic_word: np.ndarray  # (K, V), rows sum to 1
    alpha: float
    beta: float
    word_index: dict[str, int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self.topic_word = np.asarray(self.topic_word, dtype=np.float64)
        if self.topic_word.shape != (self.K, len(self.vocabulary)):
            raise TopicModelError("topic_word shape does not match K x V")
        if np.any(self.topic_word <= 0):
            raise TopicModelError("topic_word entries must be strictly positive")
        if np.max(np.abs(self.topic_word.sum(axis=1) - 1.0)) > 1e-6:
            raise TopicModelError("topic_word rows must sum to 1")
        self.word_index = {w: i for i, w in enumerate(self.vocabulary)}


@dataclass
class TopicDistribution:
    weights: np.ndarray

    def __post_init__(self) -> None:
        self.weights = np.asarray(self.weights, dtype=np.float64)
        if np.any(self.weights < 0) or abs(self.weights.sum() - 1.0) > 1e-6:
            raise TopicModelError("topic distribution must be a probability vector")

    def __len__(self) -> int:
        return len(self.weights)

    def dot(self, other: "TopicDistribution") -> float:
        return float(np.dot(self.weights, other.weights))


def _sample_index(probs: np.ndarray, rng: np.random.Generator) -> int:
    cdf = np.cumsum(probs)
    return int(np.searchsorted(cdf, rng.random() * cdf[-1], side="right"))


def train_lda(
    docs: list[list[str]],
    K: int,
    alpha: float | None = None,
    beta: float = 0.01,
    iterations: int = 200,
    seed: int = 0,
) -> TopicModel:
    """Collapsed Gibbs sampling over token-topic assignments.

    The returned topic-word matrix is the smoothed estimate
    (n_kw + beta) / (n_k + V*beta) from the final assignment state.
    Deterministic for a fixed seed.
    """
    if len(docs) < 2:
        raise TopicModelError("need at least 2 documents")
    if K < 1:
        raise TopicModelError("K must be >= 1")
    if iterations < 1:
        raise TopicModelError("iterations must be >= 1")
    vocabulary = sorted({tok for doc in docs for tok in doc})
    if not vocabulary:
        raise TopicModelError("empty vocabulary")
    if alpha is None:
        alpha = 50.0 / K
    V = len(vocabulary)
    index = {w: i for i, w in enumerate(vocabulary)}
    encoded = [[index[t] for t in doc] for doc in docs]

    rng = np.random.default_rng(seed)
    n_dk = np.zeros((len(docs), K), dtype=np.float64)
    n_kw = np.zeros((K, V), dtype=np.float64)
    n_k = np.zeros(K, dtype=np.float64)
    assignments: list[list[int]] = []
    for d, doc in enumerate(encoded):
        zs = []
        for w in doc:
            k = int(rng.integers(K))
            zs.append(k)
            n_dk[d, k] += 1
            n_kw[k, w] += 1
            n_k[k] += 1
        assignments.append(zs)

    for _ in range(iterations):
        for d, doc in enumerate(encoded):
            zs = assignments[d]
            for i, w in enumerate(doc):
                k = zs[i]
                n_dk[d, k] -= 1
                n_kw[k, w] -= 1
                n_k[k] -= 1
                probs = (n_kw[:, w] + beta) / (n_k + V * beta) * (n_dk[d] + alpha)
                k = _sample_index(probs, rng)
                zs[i] = k
                n_dk[d, k] += 1
                n_kw[k, w] += 1
                n_k[k] += 1

    topic_word = (n_kw + beta) / (n_k + V * beta)[:, None]
    return TopicModel(K=K, vocabulary=vocabulary, topic_word=topic_word, alpha=alpha, beta=beta)


def infer_topics(
    model: TopicModel,
    tokens: list[str],
    fold_in_iterations: int = 20,
    averaged_tail: int = 10,
    seed: int = 0,
) -> TopicDistribution:
    """Fold-in Gibbs with the topic-word matrix frozen.

    Out-of-vocabulary tokens are dropped; an all-OOV (or empty) input yields
    the uniform distribution. The returned proportions are the smoothed
    document-topic estimate averaged over the last ``averaged_tail`` sweeps.
    """
    K, alpha = model.K, model.alpha
    if K == 1:
        return TopicDistribution(np.array([1.0]))
    ids = [model.word_index[t] for t in tokens if t in model.word_index]
    if not ids:
        return TopicDistribution(np.full(K, 1.0 / K))

    rng = np.random.default_rng(seed)
    n_k = np.zeros(K, dtype=np.float64)
    zs = []
    for w in ids:
        k = int(rng.integers(K))
        zs.append(k)
        n_k[k] += 1

    n_tokens = len(ids)
    tail_start = max(0, fold_in_iterations - averaged_tail)
    acc = np.zeros(K, dtype=np.float64)
    recorded = 0
    for sweep in range(fold_in_iterations):
        for i, w in enumerate(ids):
            k = zs[i]
            n_k[k] -= 1
            probs = model.topic_word[:, w] * (n_k + alpha)
            k = _sample_index(probs, rng)
            zs[i] = k
            n_k[k] += 1
        if sweep >= tail_start:
            acc += (n_k + alpha) / (n_tokens + K * alpha)
            recorded += 1
    return TopicDistribution(acc / recorded)


def concept_topic_distribution(
    model: TopicModel,
    taxonomy: Taxonomy,
    concept: str,
    top_instances: int = 10,
    fold_in_iterations: int = 20,
    seed: int = 0,
) -> TopicDistribution:
    """Topic distribution of a concept via its pseudo-document.

    The pseudo-document is the concept label followed by its
    ``top_instances`` highest-typicality instances, each token-expanded.
    """
    label = concept.strip().lower()
    row = taxonomy.by_concept.get(" ".join(label.split()))
    if row is None:
        raise UnknownConceptError(f"unknown concept {concept!r}")
    tokens = topic_tokenize(label)
    if top_instances > 0:
        ranked = sorted(row, key=lambda d: (-typicality(taxonomy, d, label), d))
        for instance in ranked[:top_instances]:
            tokens.extend(topic_tokenize(instance))
    return infer_topics(model, tokens, fold_in_iterations=fold_in_iterations, seed=seed)


def uniform_topic_model(K: int, vocabulary: list[str], alpha: float | None = None) -> TopicModel:
    """Baseline model whose topics are all uniform over the vocabulary."""
    V = len(vocabulary)
    if V == 0:
        raise TopicModelError("empty vocabulary")
    return TopicModel(
        K=K,
        vocabulary=sorted(vocabulary),
        topic_word=np.full((K, V), 1.0 / V),
        alpha=alpha if alpha is not None else 50.0 / K,
        beta=0.01,
    )


def perplexity(model: TopicModel, docs: list[list[str]], seed: int = 0) -> float:
    """Corpus perplexity under fold-in document-topic estimates (OOV dropped)."""
    total_log = 0.0
    total_tokens = 0
    for doc in docs:
        theta = infer_topics(model, doc, seed=seed).weights
        for tok in doc:
            w = model.word_index.get(tok)
            if w is None:
                continue
            total_log += float(np.log(np.dot(theta, model.topic_word[:, w])))
            total_tokens += 1
    if total_tokens == 0:
        raise TopicModelError("no in-vocabulary tokens")
    return float(np.exp(-total_log / total_tokens))


def save_topic_model(model: TopicModel, path: str) -> None:
    payload = {
        "format_version": MODEL_FORMAT_VERSION,
        "K": model.K,
        "alpha": model.alpha,
        "beta": model.beta,
        "vocabulary": model.vocabulary,
        "topic_word": [float(x) for x in model.topic_word.ravel()],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, separators=(",", ":"))


def load_topic_model(path: str) -> TopicModel:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    version = payload.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise TopicModelError(f"unsupported topic model format_version {version!r}")
    K = payload["K"]
    vocabulary = payload["vocabulary"]
    matrix = np.array(payload["topic_word"], dtype=np.float64).reshape(K, len(vocabulary))
    return TopicModel(
        K=K,
        vocabulary=vocabulary,
        topic_word=matrix,
        alpha=payload["alpha"],
        beta=payload["beta"],
    )
