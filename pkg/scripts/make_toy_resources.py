#!/usr/bin/env python3
"""Build a self-contained demo deployment (taxonomy, topic model, embeddings,
frequency table, tagger lexicon, trained rank model, dataset and config) so
the CLI and service can run without any external data.

Usage: python3 scripts/make_toy_resources.py [--out demo] [--seed 0]
"""
import argparse
import json
import random
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from clozegen.corpus import ClozeItem, Dataset, save_dataset
from clozegen.features.resources import FeatureResources, save_embeddings
from clozegen.features.tagging import LexiconTagger
from clozegen.kb import load_taxonomy
from clozegen.ranker import TrainConfig, build_training_groups, save_model, train
from clozegen.topics import save_topic_model, topic_tokenize, train_lda

ANIMALS = ["dog", "cat", "horse", "wolf", "fox", "rabbit", "sheep", "goat"]
PETS = ["dog", "cat", "hamster", "rabbit", "parrot"]
VEHICLES = ["car", "bus", "tram", "train", "bicycle", "truck"]
TOOLS = ["hammer", "saw", "drill", "wrench", "chisel"]

SENTENCES = [
    "the dog and the cat are common pets in many homes",
    "a horse is a strong animal used for riding and work",
    "the wolf and the fox are wild animals of the forest",
    "sheep and goats graze together as farm animals",
    "the rabbit and the hamster are small gentle pets",
    "the car and the bus carry people along the road",
    "a tram and a train run on rails through the city",
    "the bicycle and the truck share the busy street",
    "a hammer and a saw are tools found in every workshop",
    "the drill and the wrench are tools used for repairs",
]


def build(out_dir: Path, seed: int) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(seed)

    groups = {"animal": ANIMALS, "pet": PETS, "vehicle": VEHICLES, "tool": TOOLS}
    taxonomy_path = out_dir / "taxonomy.tsv"
    with open(taxonomy_path, "w", encoding="utf-8") as fh:
        fh.write("# concept<TAB>instance<TAB>count<TAB>POS\n")
        for concept, members in groups.items():
            for instance in members:
                fh.write(f"{concept}\t{instance}\t{rng.randint(2, 20)}\tNN\n")

    corpus_path = out_dir / "corpus.txt"
    corpus_path.write_text("\n".join(SENTENCES) + "\n", encoding="utf-8")
    docs = [topic_tokenize(s) for s in SENTENCES]
    topic_model = train_lda(docs, K=4, alpha=0.5, beta=0.01, iterations=150, seed=seed)
    save_topic_model(topic_model, str(out_dir / "topic_model.json"))

    vocabulary = sorted({t for doc in docs for t in doc} | set(sum(groups.values(), [])))
    centers = {"animal": [1, 0, 0], "pet": [0.8, 0.3, 0], "vehicle": [0, 1, 0],
               "tool": [0, 0, 1]}
    embeddings = {}
    for word in vocabulary:
        base = [0.3, 0.3, 0.3]
        for concept, members in groups.items():
            if word in members:
                base = centers[concept]
                break
        embeddings[word] = np.array([b + rng.gauss(0, 0.05) for b in base])
    save_embeddings(embeddings, str(out_dir / "embeddings.txt"))

    with open(out_dir / "frequencies.tsv", "w", encoding="utf-8") as fh:
        for word in vocabulary:
            fh.write(f"{word}\t{rng.randint(5, 500)}\n")

    with open(out_dir / "lexicon.tsv", "w", encoding="utf-8") as fh:
        fh.write("graze\tVBP\ncarry\tVBP\nshare\tVBP\nrun\tVBP\nfound\tVBN\n")

    items = []
    stems = {
        "dog": "The ____ barked at the postman all morning.",
        "horse": "A strong ____ pulled the cart uphill.",
        "car": "The ____ sped down the empty road.",
        "hammer": "He drove the nail in with a ____ yesterday.",
        "tram": "The ____ rolled slowly through the old town.",
        "rabbit": "A small ____ hopped across the garden.",
    }
    fallback_gold = {
        "dog": ["wolf", "fox"], "horse": ["goat", "sheep"], "car": ["bus", "truck"],
        "hammer": ["saw", "drill"], "tram": ["train", "bicycle"],
        "rabbit": ["hamster", "cat"],
    }
    for i, (key, stem) in enumerate(stems.items()):
        items.append(ClozeItem(id=f"demo{i}", domain="common_sense", stem=stem,
                               key=key, distractors=tuple(fallback_gold[key])))
    dataset = Dataset(items)
    save_dataset(dataset, str(out_dir / "dataset.jsonl"))

    taxonomy = load_taxonomy(str(taxonomy_path), format="hypernym_export")
    resources = FeatureResources(embeddings=embeddings,
                                 frequencies={w: 50 for w in vocabulary},
                                 tagger=LexiconTagger())
    training_groups = build_training_groups(dataset, taxonomy, topic_model,
                                            resources, pool_size=30, seed=seed)
    model = train(training_groups, "lambdamart_listwise",
                  TrainConfig(rounds=40, min_rows_per_leaf=2, seed=seed))
    model.model_id = "demo-listwise"
    save_model(model, str(out_dir / "rank_model.json"))

    config = {
        "taxonomy": str(taxonomy_path),
        "taxonomy_format": "hypernym_export",
        "topic_model": str(out_dir / "topic_model.json"),
        "embeddings": str(out_dir / "embeddings.txt"),
        "frequencies": str(out_dir / "frequencies.tsv"),
        "tagger_lexicon": str(out_dir / "lexicon.tsv"),
        "rank_model": str(out_dir / "rank_model.json"),
        "feedback_log": str(out_dir / "feedback.jsonl"),
        "csg": {"concept_set_size": 20, "m": 30, "prior_smoothing": 0.0,
                "top_instances": 10, "fold_in_iterations": 20, "seed": 0},
        "ranker": {"csg_top": 30, "pos_pool": 30, "n": 3, "seed": 0},
    }
    with open(out_dir / "config.json", "w", encoding="utf-8") as fh:
        json.dump(config, fh, indent=2)
    print(f"demo resources written to {out_dir}/ (config: {out_dir}/config.json)")
    print("try: clozegen generate --config", out_dir / "config.json",
          '--stem "The ____ barked loudly." --key dog')


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="demo")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    build(Path(args.out), args.seed)
