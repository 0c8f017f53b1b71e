"""Web-search reliability score and its pluggable backends.

The score for (stem, candidate) fills the blank with the candidate, pulls
search results for the completed sentence, extracts open-IE triplets from
both sides and keeps the maximal embedding similarity between any pair.
A well-attested completion scores high, which marks the candidate as an
unreliable distractor.
"""
from __future__ import annotations

import logging
import os
import threading
import time

from ..text import fill_blank, tokenize
from .resources import FeatureResources, average_embedding, cosine
from .triplets import Triplet, extract_triplets

logger = logging.getLogger(__name__)

NEUTRAL_SCORE = 0.5


class SearchBackendError(RuntimeError):
    pass


class FixtureSearchBackend:
    """Deterministic backend serving results from an in-memory or JSON map."""

    def __init__(self, mapping: dict[str, list[dict]]):
        self.mapping = mapping

    @classmethod
    def from_file(cls, path: str) -> "FixtureSearchBackend":
        import json

        with open(path, encoding="utf-8") as fh:
            return cls(json.load(fh))

    def search(self, query: str) -> list[dict]:
        return [
            {"title": r.get("title", ""), "snippet": r.get("snippet", "")}
            for r in self.mapping.get(query, [])
        ]


class HttpSearchBackend:
    """Client for a search API endpoint returning {title, snippet} records.

    The API key is read from the configured environment variable; outbound
    calls are rate-limited to ``max_per_second`` and safe for concurrent use.
    """

    def __init__(self, endpoint: str, key_env: str = "SEARCH_API_KEY",
                 max_per_second: float = 2.0, timeout: float = 10.0):
        self.endpoint = endpoint
        self.key_env = key_env
        self.timeout = timeout
        self._min_interval = 1.0 / max_per_second if max_per_second > 0 else 0.0
        self._lock = threading.Lock()
        self._last_call = 0.0

    def search(self, query: str) -> list[dict]:
        import requests

        with self._lock:
            wait = self._last_call + self._min_interval - time.monotonic()
            if wait > 0:
                time.sleep(wait)
            self._last_call = time.monotonic()
        headers = {}
        api_key = os.environ.get(self.key_env)
        if api_key:
            headers["Ocp-Apim-Subscription-Key"] = api_key
        response = requests.get(
            self.endpoint, params={"q": query}, headers=headers, timeout=self.timeout
        )
        response.raise_for_status()
        payload = response.json()
        results = []
        for entry in _iter_result_entries(payload):
            results.append({
                "title": str(entry.get("title", entry.get("name", ""))),
                "snippet": str(entry.get("snippet", entry.get("description", ""))),
            })
        return results


def _iter_result_entries(payload):
    if isinstance(payload, list):
        return payload
    if isinstance(payload, dict):
        for key in ("results", "webPages", "items"):
            inner = payload.get(key)
            if isinstance(inner, dict) and isinstance(inner.get("value"), list):
                return inner["value"]
            if isinstance(inner, list):
                return inner
    return []


def _triplet_similarity(t1: Triplet, t2: Triplet, resources: FeatureResources) -> float:
    e1 = average_embedding(tokenize(t1.text(), casefold=True), resources.embeddings)
    e2 = average_embedding(tokenize(t2.text(), casefold=True), resources.embeddings)
    return cosine(e1, e2)


def _tag_and_extract(text: str, resources: FeatureResources) -> list[Triplet]:
    tagger = resources.tagger
    if tagger is None:
        from .tagging import LexiconTagger

        tagger = LexiconTagger()
    return extract_triplets(tagger.tag_tokens(tokenize(text)))


def web_search_score(stem: str, candidate: str, resources: FeatureResources) -> float:
    """Max triplet-embedding similarity between the completed sentence and results.

    Either side having no triplets, a disabled backend, or a backend failure
    all yield the neutral 0.5 so ranking never aborts.
    """
    if resources.search is None:
        return NEUTRAL_SCORE
    completed = fill_blank(stem, candidate)
    sentence_triplets = _tag_and_extract(completed, resources)
    # Prefer triplets that mention the candidate; fall back to all of them.
    folded = candidate.casefold()
    involving = [t for t in sentence_triplets if folded in t.text().casefold()]
    if involving:
        sentence_triplets = involving
    if not sentence_triplets:
        return NEUTRAL_SCORE

    try:
        results = resources.search.search(completed)
    except Exception as exc:  # noqa: BLE001 - backend failures must not abort ranking
        logger.warning("search backend failed (%s); using neutral score", exc)
        return NEUTRAL_SCORE

    result_triplets: list[Triplet] = []
    for record in results:
        for text in (record.get("title", ""), record.get("snippet", "")):
            if text:
                result_triplets.extend(_tag_and_extract(text, resources))
    if not result_triplets:
        return NEUTRAL_SCORE

    best = max(
        _triplet_similarity(t1, t2, resources)
        for t1 in sentence_triplets
        for t2 in result_triplets
    )
    return max(0.0, min(1.0, best))
