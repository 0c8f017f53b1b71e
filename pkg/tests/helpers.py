"""Builds a complete on-disk toy deployment: taxonomy, topic model,
embeddings, frequencies, tagger lexicon, rank model, dataset and config."""
import json

import numpy as np

from clozegen.corpus import ClozeItem, Dataset, save_dataset
from clozegen.features.resources import FeatureResources, save_embeddings
from clozegen.features.tagging import LexiconTagger
from clozegen.kb import load_taxonomy
from clozegen.ranker import TrainConfig, build_training_groups, save_model, train
from clozegen.topics import save_topic_model, train_lda

TAXONOMY_TSV = """\
animal\tdog\t10\tNN
animal\tcat\t8\tNN
animal\thorse\t4\tNN
animal\twolf\t3\tNN
pet\tdog\t5\tNN
pet\tcat\t6\tNN
pet\thamster\t2\tNN
vehicle\tcar\t9\tNN
vehicle\tbus\t3\tNN
vehicle\ttram\t2\tNN
"""

CORPUS_LINES = [
    "the dog and the cat are pets kept as animal companions",
    "a horse is a large animal and the wolf is wild",
    "the car and the bus are vehicles on the road",
    "a tram is a vehicle that moves people in the city",
]

EMBEDDINGS = {
    "dog": [1.0, 0.1, 0.0], "cat": [0.9, 0.2, 0.0], "horse": [0.8, 0.3, 0.1],
    "wolf": [0.85, 0.15, 0.05], "hamster": [0.7, 0.2, 0.2],
    "car": [0.0, 1.0, 0.1], "bus": [0.1, 0.9, 0.0], "tram": [0.05, 0.95, 0.05],
    "the": [0.3, 0.3, 0.3], "was": [0.2, 0.3, 0.4], "fed": [0.5, 0.2, 0.1],
    "road": [0.1, 0.8, 0.1],
}

DATASET_ITEMS = [
    ("t0", "The ____ was fed this morning.", "dog", ["cat", "horse"]),
    ("t1", "A ____ pulled the cart uphill.", "horse", ["dog", "wolf"]),
    ("t2", "The ____ drove down the road.", "car", ["bus", "tram"]),
    ("t3", "They kept a ____ in a small cage.", "hamster", ["cat", "dog"]),
]


def build_toy_setup(root, rounds=20, kind="lambdamart_listwise", seed=0):
    root.mkdir(parents=True, exist_ok=True)
    paths = {
        "taxonomy": str(root / "taxonomy.tsv"),
        "topic_model": str(root / "topic_model.json"),
        "embeddings": str(root / "embeddings.txt"),
        "frequencies": str(root / "frequencies.tsv"),
        "tagger_lexicon": str(root / "lexicon.tsv"),
        "rank_model": str(root / "rank_model.json"),
        "dataset": str(root / "dataset.jsonl"),
        "corpus": str(root / "corpus.txt"),
        "config": str(root / "config.json"),
        "feedback_log": str(root / "feedback.jsonl"),
        "search_fixture": str(root / "search_fixture.json"),
    }

    with open(paths["taxonomy"], "w", encoding="utf-8") as fh:
        fh.write(TAXONOMY_TSV)
    with open(paths["corpus"], "w", encoding="utf-8") as fh:
        fh.write("\n".join(CORPUS_LINES) + "\n")

    from clozegen.topics import topic_tokenize

    docs = [topic_tokenize(line) for line in CORPUS_LINES]
    topic_model = train_lda(docs, K=2, alpha=0.5, beta=0.01, iterations=60, seed=seed)
    save_topic_model(topic_model, paths["topic_model"])

    save_embeddings({w: np.array(v) for w, v in EMBEDDINGS.items()}, paths["embeddings"])

    with open(paths["frequencies"], "w", encoding="utf-8") as fh:
        for i, word in enumerate(sorted(EMBEDDINGS)):
            fh.write(f"{word}\t{100 - 5 * i}\n")

    with open(paths["tagger_lexicon"], "w", encoding="utf-8") as fh:
        fh.write("fed\tVBN\npulled\tVBD\ndrove\tVBD\nkept\tVBD\n")

    with open(paths["search_fixture"], "w", encoding="utf-8") as fh:
        json.dump({}, fh)

    dataset = Dataset([
        ClozeItem(id=i, domain="science", stem=stem, key=key, distractors=tuple(golds))
        for i, stem, key, golds in DATASET_ITEMS
    ])
    save_dataset(dataset, paths["dataset"])

    taxonomy = load_taxonomy(paths["taxonomy"], format="hypernym_export")
    resources = FeatureResources(
        embeddings={w: np.array(v) for w, v in EMBEDDINGS.items()},
        frequencies={w: 50 for w in EMBEDDINGS},
        tagger=LexiconTagger(),
    )
    groups = build_training_groups(dataset, taxonomy, topic_model, resources,
                                   pool_size=20, seed=seed)
    model = train(groups, kind, TrainConfig(rounds=rounds, min_rows_per_leaf=2, seed=seed))
    model.model_id = "toy-model"
    save_model(model, paths["rank_model"])

    config = {
        "taxonomy": paths["taxonomy"],
        "taxonomy_format": "hypernym_export",
        "topic_model": paths["topic_model"],
        "embeddings": paths["embeddings"],
        "frequencies": paths["frequencies"],
        "tagger_lexicon": paths["tagger_lexicon"],
        "rank_model": paths["rank_model"],
        "feedback_log": paths["feedback_log"],
        "csg": {"concept_set_size": 20, "m": 30, "prior_smoothing": 0.0,
                "top_instances": 10, "fold_in_iterations": 20, "seed": 0},
        "ranker": {"csg_top": 30, "pos_pool": 30, "n": 3, "seed": 0},
    }
    with open(paths["config"], "w", encoding="utf-8") as fh:
        json.dump(config, fh, indent=2)
    return paths
