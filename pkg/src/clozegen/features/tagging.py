"""Lexicon + suffix-rule POS tagger.

Intentionally small: a lexicon file (``token<TAB>tag``) handles known words
and a handful of suffix rules cover the rest. Any callable with the same
``tag(token) -> tag`` signature can be plugged in instead.
"""
from __future__ import annotations

PLURAL_TAGS = frozenset({"NNS", "NNPS"})

# Closed-class words and a few common verbs; user lexica extend/override this.
_BASE_LEXICON = {
    "the": "DT", "a": "DT", "an": "DT", "this": "DT", "that": "DT",
    "these": "DT", "those": "DT", "some": "DT", "any": "DT", "no": "DT",
    "each": "DT", "every": "DT", "all": "DT",
    "of": "IN", "in": "IN", "on": "IN", "at": "IN", "by": "IN",
    "with": "IN", "from": "IN", "into": "IN", "for": "IN", "as": "IN",
    "about": "IN", "through": "IN", "between": "IN", "during": "IN",
    "under": "IN", "over": "IN", "within": "IN",
    "to": "TO",
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC",
    "is": "VBZ", "are": "VBP", "was": "VBD", "were": "VBD",
    "be": "VB", "been": "VBN", "being": "VBG",
    "has": "VBZ", "have": "VBP", "had": "VBD",
    "do": "VBP", "does": "VBZ", "did": "VBD",
    "can": "MD", "could": "MD", "will": "MD", "would": "MD",
    "may": "MD", "might": "MD", "must": "MD", "should": "MD",
    "not": "RB", "very": "RB", "also": "RB",
    "it": "PRP", "he": "PRP", "she": "PRP", "they": "PRP",
    "we": "PRP", "you": "PRP", "i": "PRP",
    "contain": "VB", "contains": "VBZ", "contained": "VBD",
    "make": "VB", "makes": "VBZ", "made": "VBD",
    "use": "VB", "uses": "VBZ", "used": "VBN",
    "call": "VB", "called": "VBN", "calls": "VBZ",
    "become": "VB", "becomes": "VBZ", "became": "VBD",
    "produce": "VB", "produces": "VBZ", "produced": "VBN",
    "form": "VB", "forms": "VBZ", "formed": "VBN",
    "cause": "VB", "causes": "VBZ", "caused": "VBN",
    "help": "VB", "helps": "VBZ", "need": "VB", "needs": "VBZ",
}

_JJ_SUFFIXES = ("ous", "ful", "ive", "able", "ible", "ical", "less", "ish", "ary")
_SINGULAR_S_SUFFIXES = ("ss", "us", "is", "sis", "ics")


class LexiconTagger:
    """POS tagger backed by a lexicon with suffix-rule fallback."""

    def __init__(self, lexicon: dict[str, str] | None = None, use_base: bool = True):
        self.lexicon: dict[str, str] = dict(_BASE_LEXICON) if use_base else {}
        if lexicon:
            self.lexicon.update({w.casefold(): t for w, t in lexicon.items()})

    def tag(self, token: str) -> str:
        word = token.casefold()
        if word in self.lexicon:
            return self.lexicon[word]
        if not word:
            return "NN"
        if word[0].isdigit():
            return "CD"
        if word.endswith("ly"):
            return "RB"
        if word.endswith("ing") and len(word) > 4:
            return "VBG"
        if word.endswith("ed") and len(word) > 3:
            return "VBD"
        if word.endswith(_JJ_SUFFIXES):
            return "JJ"
        if word.endswith("s") and not word.endswith(_SINGULAR_S_SUFFIXES) and len(word) > 2:
            return "NNS"
        return "NN"

    def tag_tokens(self, tokens: list[str]) -> list[tuple[str, str]]:
        return [(t, self.tag(t)) for t in tokens]

    def __call__(self, token: str) -> str:
        return self.tag(token)


def load_tagger_lexicon(path: str) -> dict[str, str]:
    """Read a ``token<TAB>tag`` lexicon file."""
    lexicon: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) >= 2:
                lexicon[parts[0].casefold()] = parts[1].strip()
    return lexicon


def is_plural(token: str, tagger: "LexiconTagger | None" = None) -> bool:
    """Plural iff tagged NNS/NNPS; bare suffix heuristic without a tagger."""
    if tagger is not None:
        return tagger.tag(token) in PLURAL_TAGS
    word = token.casefold()
    return word.endswith("s") and not word.endswith(_SINGULAR_S_SUFFIXES) and len(word) > 2
