"""Open-IE triplet extraction over POS-tagged tokens.

Relation phrases follow the classic verb-anchored syntactic pattern
V | V P | V W* P: a verb, optionally followed by nouns, adjectives,
adverbs, pronouns, determiners or further verbs, ending in a preposition
or particle. The longest match wins; arguments are the nearest noun
phrases on either side, and relations missing either argument are dropped.
"""
from __future__ import annotations

from dataclasses import dataclass

VERB_TAGS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "MD"})
PREP_TAGS = frozenset({"IN", "TO", "RP"})
MIDDLE_TAGS = (
    frozenset({"NN", "NNS", "NNP", "NNPS", "PRP", "JJ", "JJR", "JJS",
               "RB", "RBR", "RBS", "DT", "CD"})
    | VERB_TAGS
    | PREP_TAGS
)
NOUN_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS", "PRP", "CD"})
NP_EXTEND_TAGS = NOUN_TAGS | frozenset({"JJ", "JJR", "JJS", "DT"})


@dataclass(frozen=True)
class Triplet:
    arg1: str
    relation: str
    arg2: str

    def text(self) -> str:
        return f"{self.arg1} {self.relation} {self.arg2}"


def _relation_end(tags: list[str], start: int) -> int:
    """Longest relation span starting at a verb; returns exclusive end index."""
    best = start + 1  # bare V
    j = start + 1
    while j < len(tags) and tags[j] in MIDDLE_TAGS:
        if tags[j] in PREP_TAGS:
            best = j + 1
        j += 1
    return best


def _noun_phrase_left(tagged: list[tuple[str, str]], pos: int) -> str | None:
    for i in range(pos - 1, -1, -1):
        if tagged[i][1] in NOUN_TAGS:
            start = i
            while start > 0 and tagged[start - 1][1] in NP_EXTEND_TAGS:
                start -= 1
            while tagged[start][1] == "DT":  # drop leading determiners
                start += 1
            return " ".join(tok for tok, _ in tagged[start : i + 1])
    return None


def _noun_phrase_right(tagged: list[tuple[str, str]], pos: int) -> str | None:
    for i in range(pos, len(tagged)):
        if tagged[i][1] in NOUN_TAGS:
            end = i
            while end + 1 < len(tagged) and tagged[end + 1][1] in NOUN_TAGS:
                end += 1
            start = i
            return " ".join(tok for tok, _ in tagged[start : end + 1])
        if tagged[i][1] not in NP_EXTEND_TAGS:
            return None
    return None


def extract_triplets(tagged: list[tuple[str, str]]) -> list[Triplet]:
    """Extract (argument1, relation phrase, argument2) triplets."""
    triplets: list[Triplet] = []
    tags = [t for _, t in tagged]
    i = 0
    while i < len(tagged):
        if tags[i] not in VERB_TAGS:
            i += 1
            continue
        end = _relation_end(tags, i)
        arg1 = _noun_phrase_left(tagged, i)
        arg2 = _noun_phrase_right(tagged, end)
        if arg1 and arg2:
            relation = " ".join(tok for tok, _ in tagged[i:end])
            triplets.append(Triplet(arg1=arg1, relation=relation, arg2=arg2))
        i = end
    return triplets
