"""Interpolated Kneser-Ney n-gram language model with a fixed discount.

Raw counts back the highest order; lower orders use continuation counts
(distinct left contexts). Out-of-vocabulary tokens map to an unknown
symbol that receives mass through the uniform base distribution, so every
per-context distribution sums to 1 over the extended vocabulary.
"""
from __future__ import annotations

import math

BOS = "<s>"
EOS = "</s>"
UNK = "<unk>"

ALLOWED_ORDERS = (3, 5)


class LanguageModelError(ValueError):
    pass


class KneserNeyLM:
    def __init__(self, docs: list[list[str]], order: int = 3, discount: float = 0.75):
        if order not in ALLOWED_ORDERS:
            raise LanguageModelError(f"order must be one of {ALLOWED_ORDERS}, got {order}")
        if not (0.0 < discount < 1.0):
            raise LanguageModelError("discount must be in (0, 1)")
        docs = [doc for doc in docs if doc]
        if not docs:
            raise LanguageModelError("empty corpus")
        self.order = order
        self.discount = discount
        self.vocab: set[str] = {tok for doc in docs for tok in doc} | {EOS}

        # raw[n][context][word]; windows predicting BOS are skipped so no
        # level ever assigns probability to the start symbol.
        raw: dict[int, dict[tuple, dict[str, int]]] = {n: {} for n in range(1, order + 1)}
        for doc in docs:
            padded = [BOS] * (order - 1) + list(doc) + [EOS]
            for n in range(1, order + 1):
                table = raw[n]
                for i in range(len(padded) - n + 1):
                    word = padded[i + n - 1]
                    if word == BOS:
                        continue
                    context = tuple(padded[i : i + n - 1])
                    table.setdefault(context, {})[word] = (
                        table.get(context, {}).get(word, 0) + 1
                    )

        # cont[n][context][word] = distinct left-extensions of (context, word)
        cont: dict[int, dict[tuple, dict[str, int]]] = {n: {} for n in range(1, order)}
        for n in range(1, order):
            table = cont[n]
            for context, words in raw[n + 1].items():
                shorter = context[1:]
                for word in words:
                    table.setdefault(shorter, {})[word] = (
                        table.get(shorter, {}).get(word, 0) + 1
                    )

        self._raw = raw[order]
        self._cont = cont
        self._raw_totals = {h: sum(ws.values()) for h, ws in self._raw.items()}
        self._cont_totals = {
            n: {h: sum(ws.values()) for h, ws in table.items()} for n, table in cont.items()
        }
        self.extended_vocab = sorted(self.vocab | {UNK})

    @classmethod
    def train(cls, docs: list[list[str]], order: int = 3, discount: float = 0.75):
        return cls(docs, order=order, discount=discount)

    def _map(self, token: str) -> str:
        return token if token in self.vocab or token == BOS else UNK

    def prob(self, word: str, context: tuple[str, ...] | list[str]) -> float:
        """p(word | context); context longer than order-1 is truncated."""
        word = self._map(word)
        history = tuple(self._map(t) for t in context)[-(self.order - 1):]
        return self._p(word, history, len(history) + 1)

    def _p(self, word: str, history: tuple[str, ...], level: int) -> float:
        D = self.discount
        if level == 1:
            table = self._cont[1].get((), {})
            total = self._cont_totals[1].get((), 0)
            if total == 0:
                return 1.0 / len(self.extended_vocab)
            count = table.get(word, 0)
            types = len(table)
            return (max(count - D, 0.0) + D * types / len(self.extended_vocab)) / total
        if level == self.order:
            table, totals = self._raw, self._raw_totals
        else:
            table, totals = self._cont[level], self._cont_totals[level]
        words = table.get(history)
        if not words:
            return self._p(word, history[1:], level - 1)
        total = totals[history]
        count = words.get(word, 0)
        types = len(words)
        lower = self._p(word, history[1:], level - 1)
        return (max(count - D, 0.0) + D * types * lower) / total

    def sentence_logprob(self, tokens: list[str]) -> float:
        """Natural-log probability of the token sequence plus end of sentence."""
        history = [BOS] * (self.order - 1)
        logprob = 0.0
        for token in list(tokens) + [EOS]:
            p = self.prob(token, tuple(history))
            logprob += math.log(p) if p > 0 else float("-inf")
            history = history[1:] + [self._map(token)]
        return logprob

    def mean_logprob(self, tokens: list[str]) -> float:
        return self.sentence_logprob(tokens) / (len(tokens) + 1)


def train_ngram_lm(docs: list[list[str]], order: int = 3) -> KneserNeyLM:
    return KneserNeyLM(docs, order=order)
