"""Distractor Selector: learning-to-rank over 33-slot feature vectors.

Three model kinds share one ensemble representation:

* ``pointwise_boost`` -- additive boosting of depth-1 stumps on the 0/1
  relevance labels with exponential-loss weighting,
* ``lambdamart_pairwise`` -- gradient-boosted regression trees fit to
  cross-pair logistic lambdas within each group,
* ``lambdamart_listwise`` -- the same lambdas, each pair weighted by the
  |delta NDCG@10| obtained from swapping the pair.

Trees are plain node arrays, so saved models re-load bit-for-bit.
"""
from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .csg import CandidateSet, CsgConfig, generate_candidates
from .features.extract import extract_features
from .features.resources import FeatureResources
from .features.schema import FEATURE_NAMES, NUM_FEATURES, SCHEMA_VERSION, FeatureVector
from .features.tagging import LexiconTagger
from .kb import Taxonomy, TaxonomyError, sample_pos_matched
from .text import stem_tokens
from .topics import TopicModel

logger = logging.getLogger(__name__)

MODEL_FORMAT_VERSION = 1
MODEL_KINDS = ("pointwise_boost", "lambdamart_pairwise", "lambdamart_listwise")
NDCG_CUTOFF = 10
_MIN_GAIN = 1e-12


class RankerError(ValueError):
    pass


# ---------------------------------------------------------------------------
# trees


@dataclass
class TreeNode:
    feature: int  # -1 marks a leaf
    threshold: float
    left: int
    right: int
    value: float
    n_samples: int
    impurity: float
    cover: float  # weighted fraction of training rows reaching the node

    def to_record(self) -> dict:
        return {
            "feature": self.feature,
            "threshold": self.threshold,
            "left": self.left,
            "right": self.right,
            "value": self.value,
            "n_samples": self.n_samples,
            "impurity": self.impurity,
            "cover": self.cover,
        }

    @classmethod
    def from_record(cls, record: dict) -> "TreeNode":
        return cls(**{k: record[k] for k in (
            "feature", "threshold", "left", "right", "value", "n_samples", "impurity", "cover"
        )})


@dataclass
class Tree:
    nodes: list[TreeNode]

    def predict_row(self, x) -> float:
        node = self.nodes[0]
        while node.feature >= 0:
            node = self.nodes[node.left] if x[node.feature] <= node.threshold else self.nodes[node.right]
        return node.value

    def predict(self, X: np.ndarray) -> np.ndarray:
        return np.array([self.predict_row(row) for row in X])

    def n_splits(self) -> int:
        return sum(1 for n in self.nodes if n.feature >= 0)


def _best_split(X: np.ndarray, y: np.ndarray, idx: np.ndarray, min_rows: int):
    """Best variance-reducing split for the rows in idx, or None."""
    n = len(idx)
    if n < 2 * min_rows:
        return None
    ys_all = y[idx]
    parent_sse = float(np.sum((ys_all - ys_all.mean()) ** 2))
    best = None  # (gain, feature, threshold)
    for f in range(X.shape[1]):
        col = X[idx, f]
        order = np.argsort(col, kind="stable")
        xs = col[order]
        ys = ys_all[order]
        csum = np.cumsum(ys)
        csq = np.cumsum(ys * ys)
        total_sum, total_sq = csum[-1], csq[-1]
        sizes = np.arange(1, n)
        left_sse = csq[:-1] - csum[:-1] ** 2 / sizes
        right_n = n - sizes
        right_sum = total_sum - csum[:-1]
        right_sse = (total_sq - csq[:-1]) - right_sum**2 / right_n
        gains = parent_sse - left_sse - right_sse
        valid = (xs[:-1] < xs[1:]) & (sizes >= min_rows) & (right_n >= min_rows)
        gains = np.where(valid, gains, -np.inf)
        s = int(np.argmax(gains))
        if gains[s] > _MIN_GAIN:
            threshold = float((xs[s] + xs[s + 1]) / 2.0)
            candidate = (float(gains[s]), f, threshold)
            if best is None or candidate[0] > best[0] or (
                candidate[0] == best[0] and (f, threshold) < (best[1], best[2])
            ):
                best = candidate
    return best


def build_regression_tree(
    X: np.ndarray, y: np.ndarray, max_leaves: int = 8, min_rows_per_leaf: int = 5
) -> Tree:
    """Best-first growth on variance reduction; deterministic tie-breaks."""
    n_total = len(y)
    nodes = [TreeNode(
        feature=-1, threshold=0.0, left=-1, right=-1,
        value=float(y.mean()), n_samples=n_total,
        impurity=float(np.var(y)), cover=1.0,
    )]
    tree = Tree(nodes)
    if max_leaves < 2:
        return tree

    frontier: dict[int, tuple[np.ndarray, tuple | None]] = {}
    all_idx = np.arange(n_total)
    frontier[0] = (all_idx, _best_split(X, y, all_idx, min_rows_per_leaf))
    leaves = 1
    while leaves < max_leaves:
        candidates = [
            (split[0], node_id) for node_id, (_, split) in frontier.items() if split is not None
        ]
        if not candidates:
            break
        candidates.sort(key=lambda c: (-c[0], c[1]))
        _, node_id = candidates[0]
        idx, split = frontier.pop(node_id)
        gain, feature, threshold = split

        mask = X[idx, feature] <= threshold
        left_idx, right_idx = idx[mask], idx[~mask]
        children = []
        for child_idx in (left_idx, right_idx):
            ys = y[child_idx]
            children.append(TreeNode(
                feature=-1, threshold=0.0, left=-1, right=-1,
                value=float(ys.mean()), n_samples=len(child_idx),
                impurity=float(np.var(ys)), cover=len(child_idx) / n_total,
            ))
        left_id = len(nodes)
        nodes.append(children[0])
        right_id = len(nodes)
        nodes.append(children[1])
        parent = nodes[node_id]
        parent.feature, parent.threshold = feature, threshold
        parent.left, parent.right = left_id, right_id
        frontier[left_id] = (left_idx, _best_split(X, y, left_idx, min_rows_per_leaf))
        frontier[right_id] = (right_idx, _best_split(X, y, right_idx, min_rows_per_leaf))
        leaves += 1
    return tree


def _fit_stump(X: np.ndarray, y: np.ndarray, w: np.ndarray) -> Tree:
    """Weighted-error-minimizing decision stump; y in {-1, +1}."""
    n = len(y)
    pos_w = w * (y > 0)
    total_pos = float(pos_w.sum())
    total_w = float(w.sum())
    best = None  # (error, feature, threshold, left_value, right_value)
    for f in range(X.shape[1]):
        col = X[:, f]
        order = np.argsort(col, kind="stable")
        xs = col[order]
        cum_pos = np.cumsum(pos_w[order])
        cum_w = np.cumsum(w[order])
        valid = xs[:-1] < xs[1:]
        if not valid.any():
            continue
        # left = -1, right = +1: error = pos weight in left + neg weight in right
        err_a = cum_pos[:-1] + (total_w - cum_w[:-1]) - (total_pos - cum_pos[:-1])
        err_b = total_w - err_a  # flipped polarity
        for errs, lval, rval in ((err_a, -1.0, 1.0), (err_b, 1.0, -1.0)):
            masked = np.where(valid, errs, np.inf)
            s = int(np.argmin(masked))
            if masked[s] == np.inf:
                continue
            threshold = float((xs[s] + xs[s + 1]) / 2.0)
            candidate = (float(masked[s]), f, threshold, lval, rval)
            if best is None or candidate[:3] < best[:3]:
                best = candidate

    if best is None:
        majority = 1.0 if total_pos >= total_w - total_pos else -1.0
        return Tree([TreeNode(-1, 0.0, -1, -1, majority, n, _gini(total_pos, total_w), 1.0)])

    _, feature, threshold, lval, rval = best
    mask = X[:, feature] <= threshold
    nodes = [TreeNode(
        feature=feature, threshold=threshold, left=1, right=2,
        value=0.0, n_samples=n, impurity=_gini(total_pos, total_w), cover=1.0,
    )]
    for side_mask, value in ((mask, lval), (~mask, rval)):
        side_w = float(w[side_mask].sum())
        side_pos = float(pos_w[side_mask].sum())
        nodes.append(TreeNode(
            feature=-1, threshold=0.0, left=-1, right=-1,
            value=value, n_samples=int(side_mask.sum()),
            impurity=_gini(side_pos, side_w), cover=side_w / total_w,
        ))
    return Tree(nodes)


def _gini(pos_weight: float, total_weight: float) -> float:
    if total_weight <= 0:
        return 0.0
    p = pos_weight / total_weight
    return 2.0 * p * (1.0 - p)


# ---------------------------------------------------------------------------
# training data


@dataclass
class RankGroup:
    """All scored candidates of one item with binary relevance labels."""

    item_id: str
    rows: list[tuple[str, FeatureVector, int]]

    def __post_init__(self) -> None:
        if not self.rows:
            raise RankerError(f"group {self.item_id}: no rows")
        if any(rel not in (0, 1) for _, _, rel in self.rows):
            raise RankerError(f"group {self.item_id}: relevance must be binary")


@dataclass
class RankedList:
    entries: list[tuple[str, float]] = field(default_factory=list)
    fallback_used: bool = False

    def surfaces(self) -> list[str]:
        return [s for s, _ in self.entries]


@dataclass
class TrainConfig:
    rounds: int = 200
    learning_rate: float = 0.1
    max_leaves: int = 8
    min_rows_per_leaf: int = 5
    seed: int = 0


@dataclass
class RankModel:
    kind: str
    trees: list[Tree]
    tree_weights: list[float]
    feature_schema_version: int = SCHEMA_VERSION
    config: dict = field(default_factory=dict)
    model_id: str = "default"
    train_ndcg: list[float] = field(default_factory=list)

    def score_row(self, x) -> float:
        return sum(w * t.predict_row(x) for w, t in zip(self.tree_weights, self.trees))

    def score_matrix(self, X: np.ndarray) -> np.ndarray:
        scores = np.zeros(len(X))
        for w, tree in zip(self.tree_weights, self.trees):
            scores += w * tree.predict(X)
        return scores


def build_training_groups(
    dataset,
    taxonomy: Taxonomy,
    topic_model: TopicModel,
    resources: FeatureResources,
    csg_cfg: CsgConfig | None = None,
    pool_size: int = 100,
    seed: int = 0,
    use_web: bool = False,
) -> list[RankGroup]:
    """Positives are the gold distractors; negatives the CSG pool minus gold.

    Items whose CSG output is empty fall back to POS-matched negatives when
    a POS index is available, and are otherwise skipped (count logged).
    """
    cfg = replace(csg_cfg or CsgConfig(), m=pool_size)
    tagger = resources.tagger if resources.tagger is not None else LexiconTagger()
    groups: list[RankGroup] = []
    skipped = 0
    for item in dataset.items:
        gold_folded = {d.casefold() for d in item.distractors}
        candidate_set = generate_candidates(item.stem, item.key, taxonomy, topic_model, cfg)
        negatives = [s for s in candidate_set.surfaces() if s.casefold() not in gold_folded]
        if not candidate_set.candidates:
            negatives = _fallback_pool(
                taxonomy, tagger, item.stem, item.key,
                exclude=gold_folded, n=pool_size, seed=seed,
            )
            if not negatives:
                skipped += 1
                continue
        rows = [
            (d, extract_features(item.stem, item.key, d, resources, use_web=use_web), 1)
            for d in item.distractors
        ]
        rows.extend(
            (d, extract_features(item.stem, item.key, d, resources, use_web=use_web), 0)
            for d in negatives
        )
        groups.append(RankGroup(item.id, rows))
    if skipped:
        logger.warning("skipped %d items with no CSG output and no fallback pool", skipped)
    if not groups:
        raise RankerError("all items skipped: no training groups could be built")
    return groups


def _fallback_pool(taxonomy, tagger, stem, key, exclude, n, seed) -> list[str]:
    try:
        return sample_pos_matched(
            taxonomy, tagger.tag(key), n, seed=seed,
            exclude=set(exclude) | {key.casefold()} | stem_tokens(stem),
        )
    except TaxonomyError:
        return []


def save_groups(groups: list[RankGroup], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for group in groups:
            for surface, features, rel in group.rows:
                fh.write(json.dumps(
                    {
                        "item_id": group.item_id,
                        "surface": surface,
                        "relevance": rel,
                        "features": features.as_list(),
                    },
                    ensure_ascii=False, sort_keys=True,
                ) + "\n")


def load_groups(path: str) -> list[RankGroup]:
    by_item: dict[str, list[tuple[str, FeatureVector, int]]] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            record = json.loads(line)
            by_item.setdefault(record["item_id"], []).append(
                (record["surface"], FeatureVector(tuple(record["features"])), int(record["relevance"]))
            )
    return [RankGroup(item_id, rows) for item_id, rows in by_item.items()]


# ---------------------------------------------------------------------------
# training


def _flatten(groups: list[RankGroup]):
    X, rel, surfaces, slices = [], [], [], []
    start = 0
    for group in groups:
        for surface, features, r in group.rows:
            X.append(features.as_list())
            rel.append(r)
            surfaces.append(surface)
        slices.append((start, start + len(group.rows)))
        start += len(group.rows)
    return np.array(X, dtype=np.float64), np.array(rel, dtype=np.float64), surfaces, slices


def _ideal_dcg(n_pos: int, k: int = NDCG_CUTOFF) -> float:
    return sum(1.0 / math.log2(i + 2) for i in range(min(n_pos, k)))


def _group_positions(scores: np.ndarray, surfaces: list[str], lo: int, hi: int) -> np.ndarray:
    """1-based rank positions within the group under (-score, surface) order."""
    order = sorted(range(lo, hi), key=lambda i: (-scores[i], surfaces[i]))
    positions = np.empty(hi - lo, dtype=np.int64)
    for rank, i in enumerate(order, start=1):
        positions[i - lo] = rank
    return positions


def _group_ndcg(scores, rel, surfaces, lo, hi, k: int = NDCG_CUTOFF) -> float:
    order = sorted(range(lo, hi), key=lambda i: (-scores[i], surfaces[i]))
    dcg = sum(
        (2.0 ** rel[i] - 1.0) / math.log2(rank + 1)
        for rank, i in enumerate(order[:k], start=1)
    )
    idcg = _ideal_dcg(int(rel[lo:hi].sum()), k)
    return dcg / idcg if idcg > 0 else 0.0


def _mean_ndcg(scores, rel, surfaces, slices) -> float:
    values = [_group_ndcg(scores, rel, surfaces, lo, hi) for lo, hi in slices]
    return float(np.mean(values)) if values else 0.0


def _compute_lambdas(scores, rel, surfaces, slices, listwise: bool) -> np.ndarray:
    lambdas = np.zeros(len(scores))
    for lo, hi in slices:
        pos_idx = np.array([i for i in range(lo, hi) if rel[i] == 1], dtype=np.int64)
        neg_idx = np.array([i for i in range(lo, hi) if rel[i] == 0], dtype=np.int64)
        if len(pos_idx) == 0 or len(neg_idx) == 0:
            continue
        diff = np.clip(scores[pos_idx][:, None] - scores[neg_idx][None, :], -35.0, 35.0)
        rho = 1.0 / (1.0 + np.exp(diff))
        if listwise:
            positions = _group_positions(scores, surfaces, lo, hi)
            idcg = _ideal_dcg(len(pos_idx))
            disc = 1.0 / np.log2(positions + 1.0)
            delta = np.abs(disc[pos_idx - lo][:, None] - disc[neg_idx - lo][None, :]) / idcg
        else:
            delta = 1.0
        contrib = rho * delta
        np.add.at(lambdas, pos_idx, contrib.sum(axis=1))
        np.add.at(lambdas, neg_idx, -contrib.sum(axis=0))
    return lambdas


def train(groups: list[RankGroup], kind: str, cfg: TrainConfig | None = None) -> RankModel:
    """Train a ranking model; deterministic for a fixed config."""
    if kind not in MODEL_KINDS:
        raise RankerError(f"unknown model kind {kind!r}")
    if cfg is None:
        cfg = TrainConfig(rounds=100) if kind == "pointwise_boost" else TrainConfig()
    if cfg.rounds < 1:
        raise RankerError("rounds must be >= 1: an empty ensemble is forbidden")

    X, rel, surfaces, slices = _flatten(groups)
    if not (rel == 1).any():
        raise RankerError("training data has no positive rows")
    if not (rel == 0).any():
        raise RankerError("training data has no negative rows")

    config_snapshot = {
        "rounds": cfg.rounds,
        "learning_rate": cfg.learning_rate,
        "max_leaves": cfg.max_leaves,
        "min_rows_per_leaf": cfg.min_rows_per_leaf,
        "seed": cfg.seed,
    }

    if kind == "pointwise_boost":
        model = _train_boost(X, rel, cfg)
    else:
        model = _train_lambdamart(X, rel, surfaces, slices, cfg, listwise=kind.endswith("listwise"))
    model.kind = kind
    model.config = config_snapshot
    scores = model.score_matrix(X)
    if not model.train_ndcg:
        model.train_ndcg = [_mean_ndcg(scores, rel, surfaces, slices)]
    return model


def _train_boost(X: np.ndarray, rel: np.ndarray, cfg: TrainConfig) -> RankModel:
    y = np.where(rel > 0, 1.0, -1.0)
    n = len(y)
    w = np.full(n, 1.0 / n)
    trees: list[Tree] = []
    weights: list[float] = []
    for _ in range(cfg.rounds):
        stump = _fit_stump(X, y, w)
        pred = stump.predict(X)
        err = float(w[pred != y].sum())
        err = min(max(err, 1e-10), 1.0 - 1e-10)
        alpha = 0.5 * math.log((1.0 - err) / err)
        trees.append(stump)
        weights.append(alpha)
        w = w * np.exp(-alpha * y * pred)
        w = w / w.sum()
    return RankModel(kind="pointwise_boost", trees=trees, tree_weights=weights)


def _train_lambdamart(X, rel, surfaces, slices, cfg: TrainConfig, listwise: bool) -> RankModel:
    scores = np.zeros(len(rel))
    trees: list[Tree] = []
    weights: list[float] = []
    ndcg_curve: list[float] = []
    for _ in range(cfg.rounds):
        lambdas = _compute_lambdas(scores, rel, surfaces, slices, listwise)
        tree = build_regression_tree(X, lambdas, cfg.max_leaves, cfg.min_rows_per_leaf)
        trees.append(tree)
        weights.append(cfg.learning_rate)
        scores = scores + cfg.learning_rate * tree.predict(X)
        ndcg_curve.append(_mean_ndcg(scores, rel, surfaces, slices))
    kind = "lambdamart_listwise" if listwise else "lambdamart_pairwise"
    return RankModel(kind=kind, trees=trees, tree_weights=weights, train_ndcg=ndcg_curve)


# ---------------------------------------------------------------------------
# inference


@dataclass
class RankConfig:
    csg_top: int = 30
    pos_pool: int = 30
    n: int = 3
    seed: int = 0
    use_web: bool = False
    csg: CsgConfig = field(default_factory=CsgConfig)


def candidate_pool(
    stem: str,
    key: str,
    taxonomy: Taxonomy,
    topic_model: TopicModel,
    resources: FeatureResources,
    cfg: RankConfig,
) -> tuple[list[str], bool]:
    """Deduplicated CSG top candidates plus POS-matched samples."""
    csg_cfg = replace(cfg.csg, m=cfg.csg_top)
    candidate_set = generate_candidates(stem, key, taxonomy, topic_model, csg_cfg)
    return extend_pool(candidate_set, stem, key, taxonomy, resources, cfg)


def extend_pool(
    candidate_set: CandidateSet,
    stem: str,
    key: str,
    taxonomy: Taxonomy,
    resources: FeatureResources,
    cfg: RankConfig,
) -> tuple[list[str], bool]:
    excluded = stem_tokens(stem) | {key.casefold()}
    pool: dict[str, str] = {}
    for surface in candidate_set.surfaces()[: cfg.csg_top]:
        folded = surface.casefold()
        if folded not in pool and folded not in excluded:
            pool[folded] = surface
    if cfg.pos_pool > 0:
        tagger = resources.tagger if resources.tagger is not None else LexiconTagger()
        try:
            sampled = sample_pos_matched(
                taxonomy, tagger.tag(key), cfg.pos_pool,
                seed=cfg.seed, exclude=excluded | set(pool),
            )
        except TaxonomyError:
            sampled = []
        for surface in sampled:
            pool.setdefault(surface.casefold(), surface)
    return list(pool.values()), candidate_set.needs_fallback


def _check_schema(model: RankModel) -> None:
    if model.feature_schema_version != SCHEMA_VERSION:
        raise RankerError(
            f"model feature schema v{model.feature_schema_version} "
            f"does not match extractor schema v{SCHEMA_VERSION}"
        )


def rank_pool(
    model: RankModel,
    stem: str,
    key: str,
    pool: list[str],
    resources: FeatureResources,
    n: int = 3,
    use_web: bool = False,
) -> list[tuple[str, float]]:
    """Featurize and score an explicit candidate pool; top-n descending.

    Case-folded duplicates keep the lexicographically smallest surface, so
    the output is invariant to the input order.
    """
    _check_schema(model)
    deduped: dict[str, str] = {}
    for surface in pool:
        folded = surface.casefold()
        if folded not in deduped or surface < deduped[folded]:
            deduped[folded] = surface
    scored = [
        (surface, model.score_row(extract_features(stem, key, surface, resources, use_web)))
        for surface in deduped.values()
    ]
    scored.sort(key=lambda e: (-e[1], e[0]))
    return scored[:n]


def rank(
    model: RankModel,
    stem: str,
    key: str,
    taxonomy: Taxonomy,
    topic_model: TopicModel,
    resources: FeatureResources,
    cfg: RankConfig | None = None,
) -> RankedList:
    """Score the candidate pool and return the top-n, ties lexicographic."""
    cfg = cfg or RankConfig()
    _check_schema(model)
    pool, fallback_used = candidate_pool(stem, key, taxonomy, topic_model, resources, cfg)
    if not pool:
        return RankedList(entries=[], fallback_used=True)
    entries = rank_pool(model, stem, key, pool, resources, n=cfg.n, use_web=cfg.use_web)
    return RankedList(entries=entries, fallback_used=fallback_used)


# ---------------------------------------------------------------------------
# introspection and persistence


def feature_importance(model: RankModel) -> list[tuple[str, float]]:
    """Mean impurity decrease per feature, normalized to sum 1."""
    if not model.trees:
        raise RankerError("empty model has no feature importances")
    totals = np.zeros(NUM_FEATURES)
    for tree in model.trees:
        per_tree = np.zeros(NUM_FEATURES)
        for node in tree.nodes:
            if node.feature < 0:
                continue
            left, right = tree.nodes[node.left], tree.nodes[node.right]
            decrease = (
                node.cover * node.impurity
                - left.cover * left.impurity
                - right.cover * right.impurity
            )
            per_tree[node.feature] += max(decrease, 0.0)
        totals += per_tree
    totals /= len(model.trees)
    total = float(totals.sum())
    if total <= 0:
        raise RankerError("model has no splits; importances undefined")
    ranked = sorted(
        zip(FEATURE_NAMES, (totals / total).tolist()), key=lambda kv: (-kv[1], kv[0])
    )
    return ranked


def save_model(model: RankModel, path: str) -> None:
    payload = {
        "format_version": MODEL_FORMAT_VERSION,
        "model_id": model.model_id,
        "kind": model.kind,
        "feature_schema_version": model.feature_schema_version,
        "config": model.config,
        "tree_weights": model.tree_weights,
        "trees": [[node.to_record() for node in tree.nodes] for tree in model.trees],
        "train_ndcg": model.train_ndcg,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, separators=(",", ":"))


def load_model(path: str) -> RankModel:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    version = payload.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise RankerError(f"unsupported model format_version {version!r}")
    if payload["kind"] not in MODEL_KINDS:
        raise RankerError(f"unknown model kind {payload['kind']!r}")
    return RankModel(
        kind=payload["kind"],
        trees=[Tree([TreeNode.from_record(r) for r in nodes]) for nodes in payload["trees"]],
        tree_weights=[float(w) for w in payload["tree_weights"]],
        feature_schema_version=int(payload["feature_schema_version"]),
        config=payload.get("config", {}),
        model_id=payload.get("model_id", "default"),
        train_ndcg=[float(v) for v in payload.get("train_ndcg", [])],
    )
