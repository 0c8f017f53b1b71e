#!/usr/bin/env python3
"""Semi-synthetic ranking benchmark: candidate-generator ordering alone vs
the three trained selector kinds vs the unsupervised baselines.

Gold distractors are planted outside the generator's top-3 but close to the
key in embedding space, so the supervised selectors have signal to learn.

Usage: python3 scripts/run_benchmark.py [--seeds 11 23 47] [--rounds 30]
"""
import argparse
import random
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from clozegen.corpus import ClozeItem, Dataset
from clozegen.csg import CsgConfig, generate_candidates
from clozegen.features.resources import FeatureResources, cosine
from clozegen.features.tagging import LexiconTagger
from clozegen.kb import Taxonomy
from clozegen.metrics import (
    BaselineResources,
    baseline_rank,
    f1_at_k,
    mrr,
    ndcg_at_k,
    precision_at_k,
)
from clozegen.ranker import RankConfig, TrainConfig, build_training_groups, rank, train
from clozegen.topics import TopicModel


def build_world(seed, n_concepts=8, n_instances=40, n_items=30):
    rng = random.Random(seed)
    instances = [f"entry{i:02d}" for i in range(n_instances)]
    edges = {}
    for c in range(n_concepts):
        for instance in rng.sample(instances, 10):
            edges[(f"family{c}", instance)] = rng.randint(1, 20)
    taxonomy = Taxonomy.from_edges(edges)
    vocab = sorted(taxonomy.instances | taxonomy.concepts)
    topic_model = TopicModel(K=1, vocabulary=vocab,
                             topic_word=np.full((1, len(vocab)), 1.0 / len(vocab)),
                             alpha=50.0, beta=0.01)
    embeddings = {w: np.array([rng.gauss(0, 1) for _ in range(6)]) for w in vocab}
    resources = FeatureResources(embeddings=embeddings, tagger=LexiconTagger())

    cfg = CsgConfig(m=100)
    items, candidates = [], {}
    used = set()
    while len(items) < n_items:
        key = rng.choice(sorted(taxonomy.instances - used))
        stem = "the missing ____ appears below"
        surfaces = generate_candidates(stem, key, taxonomy, topic_model, cfg).surfaces()
        if len(surfaces) < 8:
            used.add(key)
            continue
        used.add(key)
        eligible = sorted(surfaces[3:],
                          key=lambda d: (-cosine(embeddings[d], embeddings[key]), d))
        item_id = f"bench{len(items):02d}"
        items.append(ClozeItem(id=item_id, domain="other", stem=stem, key=key,
                               distractors=tuple(eligible[:3])))
        candidates[item_id] = surfaces
    return taxonomy, topic_model, resources, Dataset(items), candidates


def score_run(run, dataset):
    out = {}
    for name, fn in (("F1@3", lambda r, g: f1_at_k(r, g, 3)),
                     ("P@1", lambda r, g: precision_at_k(r, g, 1)),
                     ("MRR", mrr),
                     ("NDCG@10", lambda r, g: ndcg_at_k(r, g, 10))):
        values = [fn(run.get(item.id, []), set(item.distractors))
                  for item in dataset.items]
        out[name] = sum(values) / len(values)
    return out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seeds", type=int, nargs="+", default=[11, 23, 47])
    parser.add_argument("--rounds", type=int, default=30)
    args = parser.parse_args()

    systems = ["csg_only", "ed", "embsim", "pointwise_boost",
               "lambdamart_pairwise", "lambdamart_listwise"]
    totals = {name: {} for name in systems}

    for seed in args.seeds:
        taxonomy, topic_model, resources, dataset, candidates = build_world(seed)
        train_ds = Dataset(dataset.items[:20], "train")
        test_ds = Dataset(dataset.items[20:], "test")
        groups = build_training_groups(train_ds, taxonomy, topic_model, resources,
                                       pool_size=100, seed=seed)

        runs = {name: {} for name in systems}
        baseline_res = BaselineResources(embeddings=resources.embeddings)
        models = {
            kind: train(groups, kind, TrainConfig(rounds=args.rounds,
                                                  min_rows_per_leaf=3, seed=seed))
            for kind in ("pointwise_boost", "lambdamart_pairwise",
                         "lambdamart_listwise")
        }
        cfg = RankConfig(csg_top=100, pos_pool=0, n=3, seed=seed)
        for item in test_ds.items:
            pool = candidates[item.id]
            runs["csg_only"][item.id] = pool[:3]
            runs["ed"][item.id] = baseline_rank("ed", item.stem, item.key, pool,
                                                baseline_res)
            runs["embsim"][item.id] = baseline_rank("embsim", item.stem, item.key,
                                                    pool, baseline_res)
            for kind, model in models.items():
                runs[kind][item.id] = rank(model, item.stem, item.key, taxonomy,
                                           topic_model, resources, cfg)

        print(f"\nseed {seed} (test items: {len(test_ds.items)})")
        for name in systems:
            scores = score_run(runs[name], test_ds)
            for metric, value in scores.items():
                totals[name].setdefault(metric, []).append(value)
            row = "  ".join(f"{metric}={value:.3f}" for metric, value in scores.items())
            print(f"  {name:<22} {row}")

    print(f"\nmean over {len(args.seeds)} seeds")
    for name in systems:
        row = "  ".join(f"{metric}={sum(vals) / len(vals):.3f}"
                        for metric, vals in totals[name].items())
        print(f"  {name:<22} {row}")


if __name__ == "__main__":
    main()
