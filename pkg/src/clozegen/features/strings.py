"""Character-level string similarity primitives (all case-folded)."""
from __future__ import annotations


def edit_distance(s1: str, s2: str) -> int:
    """Levenshtein distance with unit costs."""
    a, b = s1.casefold(), s2.casefold()
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def longest_common_prefix_length(s1: str, s2: str) -> int:
    a, b = s1.casefold(), s2.casefold()
    n = 0
    for ca, cb in zip(a, b):
        if ca != cb:
            break
        n += 1
    return n


def longest_common_suffix_length(s1: str, s2: str) -> int:
    return longest_common_prefix_length(s1.casefold()[::-1], s2.casefold()[::-1])


def longest_common_subsequence_length(s1: str, s2: str) -> int:
    a, b = s1.casefold(), s2.casefold()
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for ca in a:
        cur = [0]
        for j, cb in enumerate(b, start=1):
            if ca == cb:
                cur.append(prev[j - 1] + 1)
            else:
                cur.append(max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def jaccard(s1: set, s2: set) -> float:
    """|intersection| / |union|; 0.0 when the union is empty."""
    union = s1 | s2
    if not union:
        return 0.0
    return len(s1 & s2) / len(union)


def dice(s1: set, s2: set) -> float:
    if not s1 and not s2:
        return 0.0
    return 2 * len(s1 & s2) / (len(s1) + len(s2))


def char_bigrams(s: str) -> set[str]:
    folded = s.casefold()
    return {folded[i : i + 2] for i in range(len(folded) - 1)}


def token_bigrams(tokens: list[str]) -> set[tuple[str, str]]:
    return {(tokens[i], tokens[i + 1]) for i in range(len(tokens) - 1)}
