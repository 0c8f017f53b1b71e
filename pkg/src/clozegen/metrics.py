"""Ranking evaluation (P/R/F1@k, MRR, NDCG, semantic similarity) and
unsupervised baseline rankers."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .features.resources import average_embedding, cosine
from .features.strings import char_bigrams, dice, edit_distance
from .kb import Taxonomy
from .ngram_lm import KneserNeyLM, train_ngram_lm  # noqa: F401 - re-exported
from .ranker import RankedList
from .text import BLANK, tokenize

BASELINE_KINDS = ("ed", "embsim", "embsim_cf", "revup", "thesaurus_path")


class MetricsError(ValueError):
    pass


def _surfaces(ranked) -> list[str]:
    if isinstance(ranked, RankedList):
        return ranked.surfaces()
    out = []
    for entry in ranked:
        out.append(entry[0] if isinstance(entry, (tuple, list)) else entry)
    return out


def _hits(ranked, gold: set[str], k: int) -> int:
    folded = {g.casefold() for g in gold}
    return sum(1 for s in _surfaces(ranked)[:k] if s.casefold() in folded)


def precision_at_k(ranked, gold: set[str], k: int) -> float:
    if k < 1:
        raise MetricsError("k must be >= 1")
    return _hits(ranked, gold, k) / k


def recall_at_k(ranked, gold: set[str], k: int) -> float:
    if k < 1:
        raise MetricsError("k must be >= 1")
    if not gold:
        return 0.0
    return _hits(ranked, gold, k) / len(gold)


def f1_at_k(ranked, gold: set[str], k: int) -> float:
    p = precision_at_k(ranked, gold, k)
    r = recall_at_k(ranked, gold, k)
    if p + r == 0.0:
        return 0.0
    return 2 * p * r / (p + r)


def mrr(ranked, gold: set[str]) -> float:
    folded = {g.casefold() for g in gold}
    for rank, surface in enumerate(_surfaces(ranked), start=1):
        if surface.casefold() in folded:
            return 1.0 / rank
    return 0.0


def ndcg_at_k(ranked, gold: set[str], k: int = 10) -> float:
    """Binary-relevance NDCG with 2^rel - 1 gains and log2(rank + 1) discounts."""
    if not gold:
        return 0.0
    folded = {g.casefold() for g in gold}
    dcg = sum(
        1.0 / math.log2(rank + 1)
        for rank, surface in enumerate(_surfaces(ranked)[:k], start=1)
        if surface.casefold() in folded
    )
    idcg = sum(1.0 / math.log2(rank + 1) for rank in range(1, min(k, len(gold)) + 1))
    return dcg / idcg


def semantic_similarity_at_k(ranked, gold: set[str], embeddings, k: int = 3) -> float:
    """Mean cosine similarity over all (top-k, gold) pairs; OOV pairs score 0."""
    top = _surfaces(ranked)[:k]
    gold_sorted = sorted(gold)
    if not top or not gold_sorted:
        return 0.0
    total = 0.0
    for d in top:
        emb_d = average_embedding(tokenize(d, casefold=True), embeddings)
        for g in gold_sorted:
            emb_g = average_embedding(tokenize(g, casefold=True), embeddings)
            total += cosine(emb_d, emb_g)
    return total / (len(top) * len(gold_sorted))


@dataclass
class EvalReport:
    overall: dict[str, float]
    per_domain: dict[str, dict[str, float]]
    domain_counts: dict[str, int]
    item_count: int

    def to_dict(self) -> dict:
        return {
            "overall": dict(self.overall),
            "per_domain": {d: dict(m) for d, m in self.per_domain.items()},
            "domain_counts": dict(self.domain_counts),
            "item_count": self.item_count,
        }

    def format_table(self) -> str:
        names = list(self.overall)
        width = max(len(n) for n in names) + 2
        lines = [f"items: {self.item_count}"]
        lines.append("metric".ljust(width) + "overall" + "".join(
            f"  {d}(n={c})" for d, c in sorted(self.domain_counts.items())
        ))
        for name in names:
            row = name.ljust(width) + f"{self.overall[name]:.4f}"
            for domain in sorted(self.domain_counts):
                row += f"  {self.per_domain[domain][name]:.4f}"
            lines.append(row)
        return "\n".join(lines)


def item_metrics(ranked, gold: set[str], ks=(1, 3), recall_k=3, ndcg_k=10,
                 embeddings=None, sem_k=3) -> dict[str, float]:
    values = {f"P@{k}": precision_at_k(ranked, gold, k) for k in ks}
    values[f"R@{recall_k}"] = recall_at_k(ranked, gold, recall_k)
    values[f"F1@{recall_k}"] = f1_at_k(ranked, gold, recall_k)
    values["MRR"] = mrr(ranked, gold)
    values[f"NDCG@{ndcg_k}"] = ndcg_at_k(ranked, gold, ndcg_k)
    if embeddings is not None:
        values[f"SemSim@{sem_k}"] = semantic_similarity_at_k(ranked, gold, embeddings, sem_k)
    return values


def evaluate(run: dict[str, "RankedList | list"], dataset, ks=(1, 3), recall_k=3,
             ndcg_k=10, embeddings=None, sem_k=3) -> EvalReport:
    """Unweighted mean over items; items missing from the run score 0."""
    if not dataset.items:
        raise MetricsError("empty dataset")
    sums: dict[str, float] = {}
    domain_sums: dict[str, dict[str, float]] = {}
    domain_counts: dict[str, int] = {}
    for item in dataset.items:
        ranked = run.get(item.id, [])
        values = item_metrics(ranked, set(item.distractors), ks, recall_k, ndcg_k,
                              embeddings, sem_k)
        domain_counts[item.domain] = domain_counts.get(item.domain, 0) + 1
        bucket = domain_sums.setdefault(item.domain, {})
        for name, value in values.items():
            sums[name] = sums.get(name, 0.0) + value
            bucket[name] = bucket.get(name, 0.0) + value
    n = len(dataset.items)
    return EvalReport(
        overall={name: total / n for name, total in sums.items()},
        per_domain={
            d: {name: total / domain_counts[d] for name, total in bucket.items()}
            for d, bucket in domain_sums.items()
        },
        domain_counts=domain_counts,
        item_count=n,
    )


# ---------------------------------------------------------------------------
# unsupervised baselines


@dataclass
class BaselineResources:
    embeddings: dict | None = None
    lm: KneserNeyLM | None = None
    trigram_counts: dict[tuple[str, str, str], int] | None = None
    taxonomy: Taxonomy | None = None
    revup_weights: tuple[float, float, float] = (1 / 3, 1 / 3, 1 / 3)
    trigram_threshold: int = 1


def build_trigram_counts(docs: list[list[str]]) -> dict[tuple[str, str, str], int]:
    counts: dict[tuple[str, str, str], int] = {}
    for doc in docs:
        padded = ["<s>"] + [t.casefold() for t in doc] + ["</s>"]
        for i in range(len(padded) - 2):
            tri = tuple(padded[i : i + 3])
            counts[tri] = counts.get(tri, 0) + 1
    return counts


def _require(value, kind: str, name: str):
    if value is None:
        raise MetricsError(f"baseline {kind!r} requires resource {name}")
    return value


def _center_trigram(stem: str, candidate: str) -> tuple[str, str, str]:
    left, _, right = stem.partition(BLANK)
    prev_tokens = tokenize(left, casefold=True)
    next_tokens = tokenize(right, casefold=True)
    cand_tokens = tokenize(candidate, casefold=True)
    center = cand_tokens[0] if cand_tokens else ""
    prev = prev_tokens[-1] if prev_tokens else "<s>"
    nxt = next_tokens[0] if next_tokens else "</s>"
    return (prev, center, nxt)


def _emb_score(key: str, candidate: str, embeddings) -> float:
    emb_a = average_embedding(tokenize(key, casefold=True), embeddings)
    emb_d = average_embedding(tokenize(candidate, casefold=True), embeddings)
    return cosine(emb_a, emb_d)


def _path_hops(taxonomy: Taxonomy, key: str, candidate: str) -> float:
    """BFS distance in the bipartite concept/instance graph (edge count)."""
    source, target = key.casefold(), candidate.casefold()
    if source not in taxonomy.by_instance or target not in taxonomy.by_instance:
        return math.inf
    if source == target:
        return 0.0
    seen = {("i", source)}
    queue = deque([(("i", source), 0)])
    while queue:
        (side, node), depth = queue.popleft()
        neighbors = (
            taxonomy.by_instance.get(node, {}) if side == "i" else taxonomy.by_concept.get(node, {})
        )
        next_side = "c" if side == "i" else "i"
        for neighbor in neighbors:
            state = (next_side, neighbor)
            if state in seen:
                continue
            if next_side == "i" and neighbor == target:
                return depth + 1
            seen.add(state)
            queue.append((state, depth + 1))
    return math.inf


def baseline_rank(kind: str, stem: str, key: str, pool: list[str],
                  resources: BaselineResources) -> RankedList:
    """Rank a candidate pool with one of the unsupervised baselines."""
    if kind not in BASELINE_KINDS:
        raise MetricsError(f"unknown baseline kind {kind!r}")
    if not pool:
        raise MetricsError("candidate pool is empty")

    if kind == "ed":
        scored = [(d, -float(edit_distance(key, d))) for d in pool]

    elif kind == "embsim":
        embeddings = _require(resources.embeddings, kind, "embeddings")
        scored = [(d, _emb_score(key, d, embeddings)) for d in pool]

    elif kind == "embsim_cf":
        embeddings = _require(resources.embeddings, kind, "embeddings")
        trigrams = _require(resources.trigram_counts, kind, "trigram_counts")
        kept = [
            d for d in pool
            if trigrams.get(_center_trigram(stem, d), 0) <= resources.trigram_threshold
        ]
        scored = [(d, _emb_score(key, d, embeddings)) for d in kept]

    elif kind == "revup":
        embeddings = _require(resources.embeddings, kind, "embeddings")
        lm = _require(resources.lm, kind, "lm")
        w1, w2, w3 = resources.revup_weights
        if abs(w1 + w2 + w3 - 1.0) > 1e-6:
            raise MetricsError("revup weights must sum to 1")
        scored = []
        for d in pool:
            completed = tokenize(stem.replace(BLANK, f" {d} "), casefold=True)
            lm_score = math.exp(lm.mean_logprob(completed))
            scored.append((
                d,
                w1 * _emb_score(key, d, embeddings)
                + w2 * dice(char_bigrams(key), char_bigrams(d))
                + w3 * lm_score,
            ))

    else:  # thesaurus_path
        taxonomy = _require(resources.taxonomy, kind, "taxonomy")
        scored = []
        for d in pool:
            hops = _path_hops(taxonomy, key, d)
            scored.append((d, 0.0 if math.isinf(hops) else 1.0 / (1.0 + hops)))

    scored.sort(key=lambda e: (-e[1], e[0]))
    return RankedList(entries=scored)
