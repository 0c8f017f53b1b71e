"""Distractor generation for cloze-style multiple-choice questions.

A taxonomy-backed candidate set generator plus a feature-rich
learning-to-rank distractor selector, with ranking evaluation,
an HTTP service and a CLI.
"""

from .corpus import ClozeItem, Dataset, dataset_stats, load_dataset, save_dataset, split_dataset
from .csg import CandidateSet, CsgConfig, generate_candidates, posterior_concepts
from .kb import Taxonomy, concepts_of, load_taxonomy, prior, sample_pos_matched, typicality
from .ranker import (
    RankConfig,
    RankedList,
    RankGroup,
    RankModel,
    TrainConfig,
    build_training_groups,
    feature_importance,
    load_model,
    rank,
    save_model,
    train,
)
from .topics import TopicModel, concept_topic_distribution, infer_topics, train_lda

__version__ = "0.1.0"

__all__ = [
    "CandidateSet",
    "ClozeItem",
    "CsgConfig",
    "Dataset",
    "RankConfig",
    "RankGroup",
    "RankModel",
    "RankedList",
    "Taxonomy",
    "TopicModel",
    "TrainConfig",
    "build_training_groups",
    "concept_topic_distribution",
    "concepts_of",
    "dataset_stats",
    "feature_importance",
    "generate_candidates",
    "infer_topics",
    "load_dataset",
    "load_model",
    "load_taxonomy",
    "posterior_concepts",
    "prior",
    "rank",
    "sample_pos_matched",
    "save_dataset",
    "save_model",
    "split_dataset",
    "train",
    "train_lda",
    "typicality",
]
