"""Fixed 33-slot feature schema shared by the extractor and ranker models."""
from __future__ import annotations

import math
from dataclasses import dataclass

SCHEMA_VERSION = 1

FEATURE_NAMES: tuple[str, ...] = (
    "emb_sim_qd",
    "emb_sim_ad",
    "ctx_emb_sim_ad",
    "edit_distance_abs",
    "edit_distance_rel_a",
    "edit_distance_rel_d",
    "token_len_a",
    "token_len_d",
    "token_len_diff_abs",
    "token_len_ratio",
    "char_len_a",
    "char_len_d",
    "char_len_diff_abs",
    "char_len_ratio",
    "singular_plural_consistency",
    "lcp_abs",
    "lcp_rel_a",
    "lcp_rel_d",
    "lcsuffix_abs",
    "lcsuffix_rel_a",
    "lcsuffix_rel_d",
    "lcsubseq_abs",
    "lcsubseq_rel_a",
    "lcsubseq_rel_d",
    "pos_jaccard",
    "log_freq_a",
    "log_freq_d",
    "log_freq_diff_abs",
    "unigram_jaccard_ad",
    "bigram_jaccard_ad",
    "token_overlap_qd_jaccard",
    "char_bigram_jaccard_ad",
    "web_search_score",
)

NUM_FEATURES = len(FEATURE_NAMES)

FEATURE_INDEX = {name: i for i, name in enumerate(FEATURE_NAMES)}

# Slots whose definitions bound them to [-1, 1] (similarities) or [0, 1].
BOUNDED_SLOTS: frozenset[int] = frozenset(
    {0, 1, 2, 9, 13, 14, 16, 17, 19, 20, 22, 23, 24, 28, 29, 30, 31, 32}
)


class FeatureError(ValueError):
    pass


@dataclass(frozen=True)
class FeatureVector:
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.values) != NUM_FEATURES:
            raise FeatureError(f"expected {NUM_FEATURES} values, got {len(self.values)}")
        if not all(math.isfinite(v) for v in self.values):
            raise FeatureError("feature values must be finite")

    def __getitem__(self, index: int) -> float:
        return self.values[index]

    def __len__(self) -> int:
        return NUM_FEATURES

    def get(self, name: str) -> float:
        return self.values[FEATURE_INDEX[name]]

    def named(self) -> dict[str, float]:
        return dict(zip(FEATURE_NAMES, self.values))

    def as_list(self) -> list[float]:
        return list(self.values)
