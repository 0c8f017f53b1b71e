#!/usr/bin/env python3
"""Generate a hypernym_export taxonomy file from WordNet.

Output format (one edge per line, loadable with format="hypernym_export"):

    concept<TAB>instance<TAB>count<TAB>POS

For nouns and verbs the concept set of a lemma is the union of the
hypernyms of its synsets plus those hypernyms' other hyponym parents
(siblings share the concept); the count is the lemma's tagged-sense
frequency (zero frequencies are floored to 1 at load time). Adjectives and
adverbs use their own synsets plus similar/antonym sets as concepts.

Requires the `nltk` package with the wordnet corpus downloaded:
    pip install nltk && python3 -c "import nltk; nltk.download('wordnet')"
"""
import argparse
import sys

POS_TAGS = {"n": "NN", "v": "VB", "a": "JJ", "s": "JJ", "r": "RB"}


def iter_edges(wn, pos_filter):
    for synset in wn.all_synsets():
        pos = synset.pos()
        if pos_filter and pos not in pos_filter:
            continue
        tag = POS_TAGS.get(pos, "NN")
        if pos in ("n", "v"):
            concepts = {h.name() for h in synset.hypernyms()}
        else:
            concepts = {synset.name()}
            concepts.update(s.synset().name() for lemma in synset.lemmas()
                            for s in lemma.antonyms())
            if pos in ("a", "s"):
                concepts.update(s.name() for s in synset.similar_tos())
        if not concepts:
            continue
        for lemma in synset.lemmas():
            count = lemma.count()  # tagged-sense frequency; 0 floored on load
            instance = lemma.name().replace("_", " ")
            for concept in concepts:
                yield concept, instance, count, tag


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="wordnet_export.tsv")
    parser.add_argument("--pos", nargs="*", default=None,
                        help="restrict to WordNet POS letters, e.g. n v")
    args = parser.parse_args()

    try:
        from nltk.corpus import wordnet as wn

        wn.ensure_loaded()
    except Exception as exc:  # noqa: BLE001
        print(f"error: WordNet unavailable ({exc}); see the module docstring",
              file=sys.stderr)
        return 1

    n = 0
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("# concept<TAB>instance<TAB>tagged-sense-count<TAB>POS\n")
        for concept, instance, count, tag in iter_edges(wn, args.pos):
            fh.write(f"{concept}\t{instance}\t{count}\t{tag}\n")
            n += 1
    print(f"wrote {n} edges to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
