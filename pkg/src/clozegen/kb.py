"""Is-A taxonomy storage and probability queries.

A taxonomy is a weighted bipartite concept/instance graph; co-occurrence
counts give the prior p(concept | instance) and the typicality
p(instance | concept), both optionally Laplace-smoothed at query time.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

from .text import normalize_space

logger = logging.getLogger(__name__)

TAXONOMY_FORMATS = ("count_tsv", "hypernym_export")


class TaxonomyError(ValueError):
    pass


class UnknownInstanceError(TaxonomyError):
    pass


class UnknownConceptError(TaxonomyError):
    pass


def _norm(label: str) -> str:
    return normalize_space(label.strip().lower())


@dataclass
class Taxonomy:
    """Immutable-after-load concept/instance graph with edge counts."""

    edges: dict[tuple[str, str], int]
    vocabulary_pos: dict[str, set[str]] | None = None
    by_instance: dict[str, dict[str, int]] = field(default_factory=dict, repr=False)
    by_concept: dict[str, dict[str, int]] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self.edges:
            raise TaxonomyError("taxonomy has no edges")
        self.by_instance = {}
        self.by_concept = {}
        for (concept, instance), count in self.edges.items():
            if count <= 0:
                raise TaxonomyError(f"non-positive count for edge ({concept}, {instance})")
            self.by_instance.setdefault(instance, {})[concept] = count
            self.by_concept.setdefault(concept, {})[instance] = count

    @property
    def concepts(self) -> set[str]:
        return set(self.by_concept)

    @property
    def instances(self) -> set[str]:
        return set(self.by_instance)

    @classmethod
    def from_edges(
        cls,
        edges: dict[tuple[str, str], int],
        vocabulary_pos: dict[str, set[str]] | None = None,
    ) -> "Taxonomy":
        merged: dict[tuple[str, str], int] = {}
        for (concept, instance), count in edges.items():
            key = (_norm(concept), _norm(instance))
            merged[key] = merged.get(key, 0) + int(count)
        pos = None
        if vocabulary_pos is not None:
            pos = {_norm(w): set(tags) for w, tags in vocabulary_pos.items()}
        return cls(merged, pos)


def load_taxonomy(path: str, format: str = "count_tsv") -> Taxonomy:
    """Parse a TSV edge file into a Taxonomy.

    Lines are ``concept<TAB>instance<TAB>count`` with an optional fourth POS
    column in the ``hypernym_export`` format. ``#``-prefixed lines are
    comments. Duplicate edges have their counts summed; zero counts in
    hypernym exports are floored to 1.
    """
    if format not in TAXONOMY_FORMATS:
        raise TaxonomyError(f"unknown taxonomy format {format!r}")
    edges: dict[tuple[str, str], int] = {}
    pos_index: dict[str, set[str]] = {}
    saw_pos = False
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < 3:
                logger.warning("%s:%d: expected at least 3 columns", path, lineno)
                continue
            concept, instance = _norm(parts[0]), _norm(parts[1])
            try:
                count = int(parts[2])
            except ValueError:
                logger.warning("%s:%d: non-integer count %r", path, lineno, parts[2])
                continue
            if format == "hypernym_export" and count == 0:
                count = 1
            if count <= 0:
                logger.warning("%s:%d: non-positive count %d rejected", path, lineno, count)
                continue
            if not concept or not instance:
                logger.warning("%s:%d: empty concept or instance", path, lineno)
                continue
            key = (concept, instance)
            edges[key] = edges.get(key, 0) + count
            if format == "hypernym_export" and len(parts) >= 4 and parts[3].strip():
                saw_pos = True
                pos_index.setdefault(instance, set()).add(parts[3].strip())
    if not edges:
        raise TaxonomyError(f"{path}: empty taxonomy")
    return Taxonomy(edges, pos_index if saw_pos else None)


def prior(t: Taxonomy, concept: str, instance: str, smoothing: float = 0.0) -> float:
    """p(concept | instance) with add-``smoothing`` over the instance's concepts."""
    concept, instance = _norm(concept), _norm(instance)
    if smoothing < 0:
        raise TaxonomyError("smoothing must be >= 0")
    row = t.by_instance.get(instance)
    if row is None:
        raise UnknownInstanceError(f"unknown instance {instance!r}")
    count = row.get(concept, 0)
    denom = sum(row.values()) + smoothing * len(row)
    return (count + smoothing) / denom


def typicality(t: Taxonomy, instance: str, concept: str, smoothing: float = 0.0) -> float:
    """p(instance | concept) with add-``smoothing`` over the concept's instances."""
    concept, instance = _norm(concept), _norm(instance)
    if smoothing < 0:
        raise TaxonomyError("smoothing must be >= 0")
    row = t.by_concept.get(concept)
    if row is None:
        raise UnknownConceptError(f"unknown concept {concept!r}")
    count = row.get(instance, 0)
    denom = sum(row.values()) + smoothing * len(row)
    return (count + smoothing) / denom


def concepts_of(t: Taxonomy, instance: str, top_k: int) -> list[tuple[str, float]]:
    """Top-k concepts of an instance by unsmoothed prior, ties lexicographic.

    Returns an empty list for instances outside the taxonomy so callers can
    fall back to POS-matched sampling.
    """
    if top_k < 1:
        raise TaxonomyError("top_k must be >= 1")
    instance = _norm(instance)
    row = t.by_instance.get(instance)
    if not row:
        return []
    total = sum(row.values())
    ranked = sorted(row.items(), key=lambda kv: (-kv[1], kv[0]))
    return [(c, count / total) for c, count in ranked[:top_k]]


def sample_pos_matched(
    t: Taxonomy,
    pos: str,
    n: int,
    seed: int = 0,
    exclude: set[str] | None = None,
) -> list[str]:
    """Sample up to n distinct instances carrying the given POS tag."""
    if t.vocabulary_pos is None:
        raise TaxonomyError("taxonomy has no POS index loaded")
    excluded = {e.casefold() for e in (exclude or set())}
    matching = sorted(
        w for w, tags in t.vocabulary_pos.items() if pos in tags and w.casefold() not in excluded
    )
    if len(matching) <= n:
        return matching
    return random.Random(seed).sample(matching, n)
