"""The (stem, key, candidate) -> 33-slot feature vector transform."""
from __future__ import annotations

from ..text import BLANK, fill_blank, tokenize
from .resources import FeatureResources, average_embedding, cosine
from .schema import FeatureVector
from .strings import (
    char_bigrams,
    edit_distance,
    jaccard,
    longest_common_prefix_length,
    longest_common_subsequence_length,
    longest_common_suffix_length,
    token_bigrams,
)
from .tagging import LexiconTagger, is_plural

_DEFAULT_TAGGER = LexiconTagger()


def pos_jaccard(a: str, d: str, tagger: LexiconTagger) -> float:
    """Jaccard similarity between the POS tag sets of the two strings."""
    tags_a = {tagger.tag(t) for t in tokenize(a)}
    tags_d = {tagger.tag(t) for t in tokenize(d)}
    return jaccard(tags_a, tags_d)


def _ratio(x: float, y: float) -> float:
    high = max(x, y)
    if high == 0:
        return 1.0
    return min(x, y) / high


def _rel(value: int, length: int) -> float:
    return value / length if length > 0 else 0.0


def extract_features(
    stem: str,
    key: str,
    candidate: str,
    resources: FeatureResources | None = None,
    use_web: bool = True,
) -> FeatureVector:
    """Populate all 33 slots; missing resources degrade to declared fallbacks."""
    r = resources if resources is not None else FeatureResources()
    tagger = r.tagger if r.tagger is not None else _DEFAULT_TAGGER

    a, d = key, candidate
    a_folded, d_folded = a.casefold(), d.casefold()
    tokens_q = tokenize(stem.replace(BLANK, " "), casefold=True)
    tokens_a = tokenize(a, casefold=True)
    tokens_d = tokenize(d, casefold=True)

    emb_q = average_embedding(tokens_q, r.embeddings)
    emb_a = average_embedding(tokens_a, r.embeddings)
    emb_d = average_embedding(tokens_d, r.embeddings)

    ctx_sim = 0.0
    if r.contextual is not None:
        vec_a = r.contextual_vector(fill_blank(stem, a), a)
        vec_d = r.contextual_vector(fill_blank(stem, d), d)
        ctx_sim = cosine(vec_a, vec_d)
    else:
        r.contextual_vector("", "")  # emits the one-time missing-provider warning

    edit = edit_distance(a, d)
    lcp = longest_common_prefix_length(a, d)
    lcsuf = longest_common_suffix_length(a, d)
    lcsub = longest_common_subsequence_length(a, d)
    len_a, len_d = len(a_folded), len(d_folded)

    plural_a = is_plural(tokens_a[-1], tagger) if tokens_a else False
    plural_d = is_plural(tokens_d[-1], tagger) if tokens_d else False

    freq_a = r.scaled_log_frequency(tokens_a)
    freq_d = r.scaled_log_frequency(tokens_d)

    if use_web and r.search is not None:
        from .websearch import web_search_score

        web = web_search_score(stem, candidate, r)
    else:
        web = 0.5

    values = (
        cosine(emb_q, emb_d),
        cosine(emb_a, emb_d),
        ctx_sim,
        float(edit),
        _rel(edit, len_a),
        _rel(edit, len_d),
        float(len(tokens_a)),
        float(len(tokens_d)),
        float(abs(len(tokens_a) - len(tokens_d))),
        _ratio(len(tokens_a), len(tokens_d)),
        float(len_a),
        float(len_d),
        float(abs(len_a - len_d)),
        _ratio(len_a, len_d),
        1.0 if plural_a == plural_d else 0.0,
        float(lcp),
        _rel(lcp, len_a),
        _rel(lcp, len_d),
        float(lcsuf),
        _rel(lcsuf, len_a),
        _rel(lcsuf, len_d),
        float(lcsub),
        _rel(lcsub, len_a),
        _rel(lcsub, len_d),
        pos_jaccard(a, d, tagger),
        freq_a,
        freq_d,
        abs(freq_a - freq_d),
        jaccard(set(tokens_a), set(tokens_d)),
        jaccard(token_bigrams(tokens_a), token_bigrams(tokens_d)),
        jaccard(set(tokens_q), set(tokens_d)),
        jaccard(char_bigrams(a), char_bigrams(d)),
        web,
    )
    return FeatureVector(values)
