"""Loading, validation, splitting and statistics for cloze-style MCQ datasets.

Dataset files are UTF-8 line-delimited JSON records with fields
``id``, ``domain``, ``stem``, ``key`` and ``distractors``.
"""
from __future__ import annotations

import json
import logging
import random
from collections import Counter
from dataclasses import dataclass, field

from .text import BLANK, tokenize

logger = logging.getLogger(__name__)

DOMAINS = ("science", "vocabulary", "common_sense", "trivia", "other")
SPLIT_TAGS = ("train", "valid", "test", "all")


class CorpusError(ValueError):
    """Raised for invalid items, records or datasets."""


@dataclass(frozen=True)
class ClozeItem:
    """One multiple-choice cloze question: blanked stem, key, gold distractors."""

    id: str
    domain: str
    stem: str
    key: str
    distractors: tuple[str, ...]

    def __post_init__(self) -> None:
        problems = validate_fields(self.domain, self.stem, self.key, self.distractors)
        if problems:
            raise CorpusError("; ".join(problems))

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "domain": self.domain,
            "stem": self.stem,
            "key": self.key,
            "distractors": list(self.distractors),
        }

    @classmethod
    def from_record(cls, record: dict) -> "ClozeItem":
        missing = [k for k in ("id", "domain", "stem", "key", "distractors") if k not in record]
        if missing:
            raise CorpusError(f"missing fields: {', '.join(missing)}")
        distractors = record["distractors"]
        if not isinstance(distractors, list) or not all(isinstance(d, str) for d in distractors):
            raise CorpusError("distractors must be a list of strings")
        return cls(
            id=str(record["id"]),
            domain=record["domain"],
            stem=record["stem"],
            key=record["key"],
            distractors=tuple(distractors),
        )


def validate_fields(domain: str, stem: str, key: str, distractors: tuple[str, ...]) -> list[str]:
    """Check ClozeItem invariants, returning one message per violation."""
    problems = []
    if domain not in DOMAINS:
        problems.append(f"unknown domain {domain!r}")
    blanks = stem.count(BLANK)
    if blanks != 1:
        problems.append(f"stem must contain exactly one {BLANK!r} marker, found {blanks}")
    if len(tokenize(key)) != 1:
        problems.append(f"key {key!r} is not a single token")
    if not distractors:
        problems.append("distractors must be non-empty")
    folded = [d.casefold() for d in distractors]
    if key.casefold() in folded:
        problems.append("key appears among distractors")
    if len(set(folded)) != len(folded):
        problems.append("distractors are not pairwise distinct (case-folded)")
    return problems


@dataclass
class Dataset:
    items: list[ClozeItem] = field(default_factory=list)
    split_tag: str = "all"

    def __post_init__(self) -> None:
        if self.split_tag not in SPLIT_TAGS:
            raise CorpusError(f"unknown split tag {self.split_tag!r}")
        ids = [it.id for it in self.items]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise CorpusError(f"duplicate item ids: {dupes[:5]}")

    def __len__(self) -> int:
        return len(self.items)

    def by_domain(self, domain: str) -> "Dataset":
        return Dataset([it for it in self.items if it.domain == domain], self.split_tag)


def load_dataset(path: str, split_tag: str = "all") -> Dataset:
    """Load a line-delimited dataset file, keeping valid records in file order.

    Malformed records are logged with their line number and skipped;
    a file yielding zero valid items is a fatal error.
    """
    items: list[ClozeItem] = []
    errors = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                items.append(ClozeItem.from_record(record))
            except (json.JSONDecodeError, CorpusError, TypeError) as exc:
                errors += 1
                logger.warning("%s:%d: invalid record: %s", path, lineno, exc)
    if not items:
        raise CorpusError(f"{path}: no valid items ({errors} rejected)")
    if errors:
        logger.warning("%s: rejected %d invalid records", path, errors)
    return Dataset(items, split_tag)


def save_dataset(dataset: Dataset, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for item in dataset.items:
            fh.write(json.dumps(item.to_record(), ensure_ascii=False) + "\n")


def split_dataset(
    dataset: Dataset,
    ratios: tuple[float, float, float] = (0.8, 0.1, 0.1),
    seed: int = 0,
) -> tuple[Dataset, Dataset, Dataset]:
    """Deterministic train/valid/test partition.

    Valid and test sizes are floor-allocated; the remainder goes to train.
    """
    r_train, r_valid, r_test = ratios
    if min(ratios) <= 0:
        raise CorpusError("split ratios must be positive")
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise CorpusError(f"split ratios must sum to 1, got {sum(ratios)}")
    n = len(dataset)
    if n < 3:
        raise CorpusError(f"dataset too small to split ({n} items)")
    n_valid = int(n * r_valid)
    n_test = int(n * r_test)
    n_train = n - n_valid - n_test

    indices = list(range(n))
    random.Random(seed).shuffle(indices)
    picked = [dataset.items[i] for i in indices]
    return (
        Dataset(picked[:n_train], "train"),
        Dataset(picked[n_train : n_train + n_valid], "valid"),
        Dataset(picked[n_train + n_valid :], "test"),
    )


@dataclass
class StatsReport:
    total: int
    domain_counts: dict[str, int]
    mean_distractors: float
    domain_mean_distractors: dict[str, float]
    key_pos_histogram: dict[str, int]

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "domain_counts": dict(self.domain_counts),
            "mean_distractors": self.mean_distractors,
            "domain_mean_distractors": dict(self.domain_mean_distractors),
            "key_pos_histogram": dict(self.key_pos_histogram),
        }


def dataset_stats(dataset: Dataset, tagger=None) -> StatsReport:
    """Per-domain counts, mean distractors per item and key POS histogram.

    ``tagger`` is any callable mapping a token to a POS tag; the bundled
    lexicon + suffix tagger is used when omitted.
    """
    if not dataset.items:
        raise CorpusError("cannot compute statistics of an empty dataset")
    if tagger is None:
        from .features.tagging import LexiconTagger

        tagger = LexiconTagger().tag

    domain_counts: Counter = Counter()
    domain_dist: Counter = Counter()
    pos_hist: Counter = Counter()
    total_dist = 0
    for item in dataset.items:
        domain_counts[item.domain] += 1
        domain_dist[item.domain] += len(item.distractors)
        total_dist += len(item.distractors)
        pos_hist[tagger(item.key)] += 1

    total = len(dataset.items)
    return StatsReport(
        total=total,
        domain_counts=dict(sorted(domain_counts.items())),
        mean_distractors=round(total_dist / total, 2),
        domain_mean_distractors={
            d: round(domain_dist[d] / c, 2) for d, c in sorted(domain_counts.items())
        },
        key_pos_histogram=dict(sorted(pos_hist.items())),
    )
