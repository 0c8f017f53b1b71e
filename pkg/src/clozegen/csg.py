"""Candidate Set Generator.

Context-dependent conceptualization weights each of the key's concepts by
its prior times the topic overlap between the completed sentence and the
concept; the candidate distribution then mixes each concept's typicality
by those weights, filters the key and stem occurrences, and keeps the
top-m renormalized survivors.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .kb import Taxonomy, concepts_of, prior, typicality
from .text import fill_blank, normalize_space, stem_tokens
from .topics import TopicModel, concept_topic_distribution, infer_topics, topic_tokenize


@dataclass
class CsgConfig:
    concept_set_size: int = 20
    m: int = 30
    prior_smoothing: float = 0.0
    top_instances: int = 10
    fold_in_iterations: int = 20
    seed: int = 0


@dataclass
class CandidateSet:
    """Candidates with probabilities, descending; empty sets flag the
    caller to fall back to POS-matched sampling."""

    candidates: list[tuple[str, float]] = field(default_factory=list)
    needs_fallback: bool = False

    def surfaces(self) -> list[str]:
        return [surface for surface, _ in self.candidates]

    def __len__(self) -> int:
        return len(self.candidates)


def sentence_topics(stem: str, key: str, model: TopicModel, cfg: CsgConfig):
    """Topic distribution of the stem with the blank filled by the key."""
    tokens = topic_tokenize(fill_blank(stem, key))
    return infer_topics(
        model, tokens, fold_in_iterations=cfg.fold_in_iterations, seed=cfg.seed
    )


def combine_concept_weights(
    priors: list[tuple[str, float]], overlaps: dict[str, float]
) -> list[tuple[str, float]]:
    """Normalize prior * topic-overlap products; descending, ties lexicographic.

    An all-zero product vector falls back to the normalized priors alone.
    """
    weighted = [(c, p * overlaps[c]) for c, p in priors]
    total = sum(w for _, w in weighted)
    if total <= 0.0:
        weighted = priors
        total = sum(w for _, w in weighted)
    normalized = [(c, w / total) for c, w in weighted]
    normalized.sort(key=lambda cw: (-cw[1], cw[0]))
    return normalized


def posterior_concepts(
    stem: str,
    key: str,
    taxonomy: Taxonomy,
    model: TopicModel,
    cfg: CsgConfig | None = None,
) -> list[tuple[str, float]]:
    """Concept weights p(c | key, stem), normalized over the selected set.

    Weight of concept c is prior(c | key) times the dot product of the
    sentence topic distribution with the concept topic distribution.
    Returns an empty list when the key has no concepts in the taxonomy.
    """
    cfg = cfg or CsgConfig()
    selected = concepts_of(taxonomy, key, cfg.concept_set_size)
    if not selected:
        return []

    pi = [float(x) for x in sentence_topics(stem, key, model, cfg).weights]
    priors = [(c, prior(taxonomy, c, key, cfg.prior_smoothing)) for c, _ in selected]
    overlaps: dict[str, float] = {}
    for concept, _ in selected:
        gamma = concept_topic_distribution(
            model,
            taxonomy,
            concept,
            top_instances=cfg.top_instances,
            fold_in_iterations=cfg.fold_in_iterations,
            seed=cfg.seed,
        ).weights
        overlaps[concept] = sum(p * float(g) for p, g in zip(pi, gamma))
    return combine_concept_weights(priors, overlaps)


def _occurs_in_stem(candidate_folded: str, stem_token_set: set[str], stem_folded: str) -> bool:
    if " " in candidate_folded:
        return candidate_folded in stem_folded
    return candidate_folded in stem_token_set


def generate_candidates(
    stem: str,
    key: str,
    taxonomy: Taxonomy,
    model: TopicModel,
    cfg: CsgConfig | None = None,
) -> CandidateSet:
    """Top-m candidate distractors with renormalized probabilities."""
    cfg = cfg or CsgConfig()
    concept_weights = posterior_concepts(stem, key, taxonomy, model, cfg)
    if not concept_weights:
        return CandidateSet(candidates=[], needs_fallback=True)

    key_folded = normalize_space(key.casefold())
    token_set = stem_tokens(stem)
    stem_folded = normalize_space(stem.casefold())

    scores: dict[str, float] = {}
    for concept, weight in concept_weights:
        for instance in sorted(taxonomy.by_concept[concept]):
            if instance == key_folded:
                continue
            if _occurs_in_stem(instance, token_set, stem_folded):
                continue
            scores[instance] = scores.get(instance, 0.0) + (
                typicality(taxonomy, instance, concept, cfg.prior_smoothing) * weight
            )

    if not scores:
        return CandidateSet(candidates=[], needs_fallback=True)

    total = sum(scores.values())
    ranked = sorted(((d, s / total) for d, s in scores.items()), key=lambda ds: (-ds[1], ds[0]))
    ranked = ranked[: cfg.m]
    kept = sum(p for _, p in ranked)
    return CandidateSet(candidates=[(d, p / kept) for d, p in ranked], needs_fallback=False)
