"""Shared tokenization and blank-marker helpers."""
from __future__ import annotations

import re

BLANK = "____"

_TOKEN_RE = re.compile(r"[0-9A-Za-zÀ-￿]+")


def tokenize(text: str, casefold: bool = False) -> list[str]:
    """Split on non-alphanumeric runs; keeps tokens of any length."""
    if casefold:
        text = text.casefold()
    return _TOKEN_RE.findall(text)


def normalize_space(text: str) -> str:
    return " ".join(text.split())


def fill_blank(stem: str, text: str) -> str:
    """Replace the first blank marker with ``text``; append when no marker."""
    if BLANK in stem:
        return stem.replace(BLANK, text, 1)
    return f"{stem} {text}".strip()


def stem_tokens(stem: str) -> set[str]:
    """Case-folded token set of a stem, blank marker removed."""
    return set(tokenize(stem.replace(BLANK, " "), casefold=True))
