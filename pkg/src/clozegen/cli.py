"""Command-line interface.

Subcommands: generate, csg, train, rank, eval, lda-train, serve, stats.
Errors print one machine-parsable JSON line to stderr and exit nonzero;
all randomness is seedable via --seed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .corpus import CorpusError, dataset_stats, load_dataset
from .csg import CsgConfig, generate_candidates
from .features.resources import ResourceError, load_embeddings
from .kb import TaxonomyError
from .metrics import MetricsError, evaluate
from .ngram_lm import LanguageModelError
from .ranker import (
    RankConfig,
    RankedList,
    RankerError,
    TrainConfig,
    build_training_groups,
    extend_pool,
    load_groups,
    load_model,
    rank,
    rank_pool,
    save_groups,
    save_model,
    train,
)
from .service import ServiceConfig, ServiceError, load_resources, load_state, serve
from .topics import TopicModelError, save_topic_model, train_lda

KNOWN_ERRORS = (
    CorpusError, TaxonomyError, TopicModelError, RankerError, MetricsError,
    LanguageModelError, ResourceError, ServiceError, FileNotFoundError, ValueError,
)


def _emit(payload: dict, out_path: str | None = None) -> None:
    text = json.dumps(payload, ensure_ascii=False, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _service_config(args) -> ServiceConfig:
    cfg = ServiceConfig.from_file(args.config) if args.config else ServiceConfig()
    overrides = {
        name: getattr(args, flag)
        for name, flag in (
            ("taxonomy", "taxonomy"),
            ("taxonomy_format", "taxonomy_format"),
            ("topic_model", "topic_model"),
            ("embeddings", "embeddings"),
            ("frequencies", "frequencies"),
            ("tagger_lexicon", "tagger_lexicon"),
            ("rank_model", "model"),
            ("search_fixture", "search_fixture"),
            ("feedback_log", "feedback_log"),
        )
        if hasattr(args, flag)
    }
    cfg.override(**overrides)
    if getattr(args, "seed", None) is not None:
        cfg.csg = replace(cfg.csg, seed=args.seed)
        cfg.ranker.seed = args.seed
        cfg.ranker.csg = cfg.csg
    return cfg


def _add_resource_flags(parser: argparse.ArgumentParser, with_model: bool = True) -> None:
    parser.add_argument("--config", help="service config JSON (flags override it)")
    parser.add_argument("--taxonomy")
    parser.add_argument("--taxonomy-format", dest="taxonomy_format",
                        choices=["count_tsv", "hypernym_export"])
    parser.add_argument("--topic-model", dest="topic_model")
    parser.add_argument("--embeddings")
    parser.add_argument("--frequencies")
    parser.add_argument("--tagger-lexicon", dest="tagger_lexicon")
    parser.add_argument("--search-fixture", dest="search_fixture")
    parser.add_argument("--feedback-log", dest="feedback_log")
    if with_model:
        parser.add_argument("--model", help="rank model file")


def _ranked_payload(ranked: RankedList) -> dict:
    return {
        "distractors": [
            {"surface": s, "score": v, "rank": i}
            for i, (s, v) in enumerate(ranked.entries, start=1)
        ],
        "fallback_used": ranked.fallback_used,
    }


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_stats(args) -> int:
    report = dataset_stats(load_dataset(args.dataset))
    _emit(report.to_dict(), args.out)
    return 0


def cmd_lda_train(args) -> int:
    with open(args.corpus, encoding="utf-8") as fh:
        from .topics import topic_tokenize

        docs = [topic_tokenize(line) for line in fh if line.strip()]
    model = train_lda(docs, K=args.k, alpha=args.alpha, beta=args.beta,
                      iterations=args.iterations, seed=args.seed)
    save_topic_model(model, args.out)
    _emit({"out": args.out, "K": model.K, "vocabulary_size": len(model.vocabulary)})
    return 0


def cmd_csg(args) -> int:
    # CSG needs only the taxonomy and topic model; skip the full state load.
    from .kb import load_taxonomy
    from .topics import load_topic_model

    cfg = _service_config(args)
    if not cfg.taxonomy:
        raise ServiceError("missing resource: no taxonomy configured")
    if not cfg.topic_model:
        raise ServiceError("missing resource: no topic_model configured")
    taxonomy = load_taxonomy(cfg.taxonomy, cfg.taxonomy_format)
    topic_model = load_topic_model(cfg.topic_model)
    csg_cfg = replace(cfg.csg, m=args.m if args.m is not None else cfg.csg.m)
    candidate_set = generate_candidates(args.stem, args.key, taxonomy, topic_model, csg_cfg)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for surface, probability in candidate_set.candidates:
                fh.write(json.dumps(
                    {"item_id": "cli", "surface": surface, "probability": probability},
                    ensure_ascii=False, sort_keys=True) + "\n")
    else:
        _emit({
            "candidates": [
                {"surface": s, "probability": p} for s, p in candidate_set.candidates
            ],
            "needs_fallback": candidate_set.needs_fallback,
        })
    return 0


def cmd_train(args) -> int:
    if args.groups:
        groups = load_groups(args.groups)
    elif args.dataset:
        cfg = _service_config(args)
        bundle = load_resources(cfg)
        dataset = load_dataset(args.dataset)
        pool_size = args.pool_size if args.pool_size is not None else cfg.pool_size
        groups = build_training_groups(
            dataset, bundle.taxonomy, bundle.topic_model, bundle.resources,
            csg_cfg=cfg.csg, pool_size=pool_size, seed=args.seed or 0,
        )
        if args.save_groups:
            save_groups(groups, args.save_groups)
    else:
        raise RankerError("train requires --groups or --dataset")
    cfg_train = TrainConfig(
        rounds=args.rounds,
        learning_rate=args.learning_rate,
        max_leaves=args.max_leaves,
        min_rows_per_leaf=args.min_rows_per_leaf,
        seed=args.seed or 0,
    )
    model = train(groups, args.kind, cfg_train)
    model.model_id = args.model_id
    save_model(model, args.out)
    _emit({"out": args.out, "kind": model.kind, "trees": len(model.trees),
           "model_id": model.model_id})
    return 0


def cmd_rank(args) -> int:
    cfg = _service_config(args)
    state = load_state(cfg)
    surfaces = []
    with open(args.candidates, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                surfaces.append(json.loads(line)["surface"])
    from .csg import CandidateSet

    candidate_set = CandidateSet(
        candidates=[(s, 0.0) for s in surfaces], needs_fallback=not surfaces
    )
    rank_cfg = replace(cfg.ranker, n=args.n, use_web=args.use_web)
    pool, fallback_used = extend_pool(candidate_set, args.stem, args.key,
                                      state.taxonomy, state.resources, rank_cfg)
    entries = rank_pool(state.model, args.stem, args.key, pool, state.resources,
                        n=args.n, use_web=args.use_web)
    _emit(_ranked_payload(RankedList(entries=entries, fallback_used=fallback_used)),
          args.out)
    return 0


def cmd_generate(args) -> int:
    cfg = _service_config(args)
    state = load_state(cfg)
    rank_cfg = replace(cfg.ranker, n=args.n, use_web=args.use_web)
    ranked = rank(state.model, args.stem, args.key, state.taxonomy,
                  state.topic_model, state.resources, rank_cfg)
    _emit(_ranked_payload(ranked), args.out)
    return 0


def cmd_eval(args) -> int:
    dataset = load_dataset(args.dataset)
    run: dict[str, list] = {}
    with open(args.run, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            record = json.loads(line)
            run[record["item_id"]] = [(e["surface"], e["score"])
                                      for e in record["ranked"]]
    embeddings = load_embeddings(args.embeddings) if args.embeddings else None
    report = evaluate(run, dataset, embeddings=embeddings)
    if args.json:
        _emit(report.to_dict(), args.out)
    else:
        print(report.format_table())
    return 0


def cmd_serve(args) -> int:
    cfg = _service_config(args)
    if args.host:
        cfg.host = args.host
    if args.port:
        cfg.port = args.port
    if args.ui_dir:
        cfg.ui_dir = args.ui_dir
    serve(cfg)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clozegen",
                                     description="cloze-MCQ distractor generation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="dataset statistics")
    p.add_argument("--dataset", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("lda-train", help="train the topic model")
    p.add_argument("--corpus", required=True, help="one document per line")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--beta", type=float, default=0.01)
    p.add_argument("--iterations", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_lda_train)

    p = sub.add_parser("csg", help="generate a candidate set")
    _add_resource_flags(p, with_model=False)
    p.add_argument("--stem", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_csg)

    p = sub.add_parser("train", help="train a ranking model")
    _add_resource_flags(p)
    p.add_argument("--groups", help="training-group file")
    p.add_argument("--dataset", help="build groups from a dataset instead")
    p.add_argument("--save-groups", dest="save_groups")
    p.add_argument("--kind", required=True,
                   choices=["pointwise_boost", "lambdamart_pairwise",
                            "lambdamart_listwise"])
    p.add_argument("--rounds", type=int, default=200)
    p.add_argument("--learning-rate", dest="learning_rate", type=float, default=0.1)
    p.add_argument("--max-leaves", dest="max_leaves", type=int, default=8)
    p.add_argument("--min-rows-per-leaf", dest="min_rows_per_leaf", type=int, default=5)
    p.add_argument("--pool-size", dest="pool_size", type=int, default=None,
                   help="training negative pool (default: config pool_size, 100)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--model-id", dest="model_id", default="default")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("rank", help="rank a candidates file")
    _add_resource_flags(p)
    p.add_argument("--candidates", required=True)
    p.add_argument("--stem", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--use-web", dest="use_web", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("generate", help="end-to-end distractor generation")
    _add_resource_flags(p)
    p.add_argument("--stem", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--use-web", dest="use_web", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("eval", help="score a run file against a dataset")
    p.add_argument("--run", required=True)
    p.add_argument("--dataset", required=True)
    p.add_argument("--embeddings")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("serve", help="run the HTTP service")
    _add_resource_flags(p)
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.add_argument("--ui-dir", dest="ui_dir")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except KNOWN_ERRORS as exc:
        print(json.dumps({"error": str(exc)}, ensure_ascii=False), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
