"""Pluggable resources consumed by the feature extractor.

Static embeddings, a unigram frequency table, a POS tagger, an optional
contextual-embedding provider and an optional search backend. Every part
degrades gracefully: feature extraction never aborts on a missing resource.
"""
from __future__ import annotations

import json
import logging
import math
import threading
from dataclasses import dataclass, field
from typing import Callable, Protocol

import numpy as np

from .tagging import LexiconTagger

logger = logging.getLogger(__name__)


class ResourceError(ValueError):
    pass


def load_embeddings(path: str) -> dict[str, np.ndarray]:
    """Text embeddings: first line ``V D``, then ``word v1 ... vD`` per line."""
    table: dict[str, np.ndarray] = {}
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise ResourceError(f"{path}: expected 'V D' header")
        n_words, dim = int(header[0]), int(header[1])
        for lineno, line in enumerate(fh, start=2):
            parts = line.rstrip("\n").split(" ")
            if len(parts) != dim + 1:
                logger.warning("%s:%d: expected %d values", path, lineno, dim)
                continue
            table[parts[0].casefold()] = np.array([float(x) for x in parts[1:]])
    if len(table) != n_words:
        logger.warning("%s: header declared %d words, loaded %d", path, n_words, len(table))
    if not table:
        raise ResourceError(f"{path}: no embeddings loaded")
    return table


def save_embeddings(table: dict[str, np.ndarray], path: str) -> None:
    words = sorted(table)
    dim = len(table[words[0]])
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{len(words)} {dim}\n")
        for w in words:
            fh.write(w + " " + " ".join(repr(float(x)) for x in table[w]) + "\n")


def load_frequencies(path: str) -> dict[str, int]:
    """``token<TAB>count`` lines."""
    counts: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < 2:
                logger.warning("%s:%d: expected token<TAB>count", path, lineno)
                continue
            try:
                counts[parts[0].casefold()] = int(parts[1])
            except ValueError:
                logger.warning("%s:%d: non-integer count %r", path, lineno, parts[1])
    return counts


def cosine(u: np.ndarray | None, v: np.ndarray | None) -> float:
    """Cosine similarity; 0.0 when either vector is missing or zero."""
    if u is None or v is None:
        return 0.0
    nu, nv = float(np.linalg.norm(u)), float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    value = float(np.dot(u, v) / (nu * nv))
    return max(-1.0, min(1.0, value))


def average_embedding(
    tokens: list[str], embeddings: dict[str, np.ndarray] | None
) -> np.ndarray | None:
    """Mean of member-token embeddings; OOV tokens skipped, all-OOV -> None."""
    if not embeddings:
        return None
    vectors = [embeddings[t] for t in tokens if t in embeddings]
    if not vectors:
        return None
    return np.mean(vectors, axis=0)


class ContextualProvider(Protocol):
    def __call__(self, sentence: str, span: str) -> np.ndarray | None: ...


class FileCachedContextualProvider:
    """File-backed (sentence, span) -> vector cache around an optional inner provider.

    With no inner provider, cache misses return None; writes are serialized.
    """

    def __init__(self, path: str, inner: Callable[[str, str], np.ndarray] | None = None):
        self.path = path
        self.inner = inner
        self._lock = threading.Lock()
        self._cache: dict[str, list[float]] = {}
        try:
            with open(path, encoding="utf-8") as fh:
                self._cache = json.load(fh)
        except FileNotFoundError:
            pass

    @staticmethod
    def _key(sentence: str, span: str) -> str:
        return json.dumps([sentence, span], ensure_ascii=False)

    def __call__(self, sentence: str, span: str) -> np.ndarray | None:
        key = self._key(sentence, span)
        hit = self._cache.get(key)
        if hit is not None:
            return np.array(hit, dtype=np.float64)
        if self.inner is None:
            return None
        vector = self.inner(sentence, span)
        with self._lock:
            self._cache[key] = [float(x) for x in vector]
            with open(self.path, "w", encoding="utf-8") as fh:
                json.dump(self._cache, fh, ensure_ascii=False)
        return np.asarray(vector, dtype=np.float64)

    def put(self, sentence: str, span: str, vector) -> None:
        with self._lock:
            self._cache[self._key(sentence, span)] = [float(x) for x in vector]
            with open(self.path, "w", encoding="utf-8") as fh:
                json.dump(self._cache, fh, ensure_ascii=False)


@dataclass
class FeatureResources:
    embeddings: dict[str, np.ndarray] | None = None
    contextual: ContextualProvider | None = None
    frequencies: dict[str, int] | None = None
    tagger: LexiconTagger | None = None
    search: "object | None" = None  # SearchBackend, see websearch module
    max_frequency: int = field(init=False, default=0)
    _warned_no_contextual: bool = field(init=False, default=False, repr=False)

    def __post_init__(self) -> None:
        if self.frequencies:
            self.max_frequency = max(self.frequencies.values())

    def scaled_log_frequency(self, tokens: list[str]) -> float:
        """log(1 + mean count) / log(1 + max count); 0 without a table."""
        if not self.frequencies or self.max_frequency <= 0 or not tokens:
            return 0.0
        mean = sum(self.frequencies.get(t, 0) for t in tokens) / len(tokens)
        return math.log1p(mean) / math.log1p(self.max_frequency)

    def contextual_vector(self, sentence: str, span: str) -> np.ndarray | None:
        if self.contextual is None:
            if not self._warned_no_contextual:
                logger.warning("no contextual-embedding provider configured; slot defaults to 0")
                self._warned_no_contextual = True
            return None
        return self.contextual(sentence, span)
