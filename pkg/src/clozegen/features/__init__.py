from .extract import extract_features, pos_jaccard
from .resources import (
    FeatureResources,
    FileCachedContextualProvider,
    average_embedding,
    cosine,
    load_embeddings,
    load_frequencies,
    save_embeddings,
)
from .schema import BOUNDED_SLOTS, FEATURE_INDEX, FEATURE_NAMES, NUM_FEATURES, SCHEMA_VERSION, FeatureVector
from .strings import (
    edit_distance,
    longest_common_prefix_length,
    longest_common_subsequence_length,
    longest_common_suffix_length,
)
from .tagging import LexiconTagger, load_tagger_lexicon
from .triplets import Triplet, extract_triplets
from .websearch import FixtureSearchBackend, HttpSearchBackend, web_search_score

__all__ = [
    "BOUNDED_SLOTS",
    "FEATURE_INDEX",
    "FEATURE_NAMES",
    "NUM_FEATURES",
    "SCHEMA_VERSION",
    "FeatureResources",
    "FeatureVector",
    "FileCachedContextualProvider",
    "FixtureSearchBackend",
    "HttpSearchBackend",
    "LexiconTagger",
    "Triplet",
    "average_embedding",
    "cosine",
    "edit_distance",
    "extract_features",
    "extract_triplets",
    "load_embeddings",
    "load_frequencies",
    "load_tagger_lexicon",
    "longest_common_prefix_length",
    "longest_common_subsequence_length",
    "longest_common_suffix_length",
    "pos_jaccard",
    "save_embeddings",
    "web_search_score",
]
