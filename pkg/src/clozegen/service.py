"""HTTP service: distractor generation, feedback capture and export.

Endpoints (JSON bodies):
  GET  /v1/health            liveness plus loaded model info
  POST /v1/distractors       GenerationRequest -> GenerationResponse
  POST /v1/feedback          store one accept/reject/edit verdict
  GET  /v1/feedback/export   feedback as ranker training-group records
  GET  /v1/models            loaded models

All models are loaded once and shared read-only across requests; feedback
writes go through a single append-only log.
"""
from __future__ import annotations

import hashlib
import json
import logging
import threading
import time
from dataclasses import dataclass, field, fields
from datetime import datetime, timezone
from typing import Literal

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, Field, model_validator

from .csg import CsgConfig
from .features.extract import extract_features
from .features.resources import (
    FeatureResources,
    FileCachedContextualProvider,
    load_embeddings,
    load_frequencies,
)
from .features.schema import SCHEMA_VERSION
from .features.tagging import LexiconTagger, load_tagger_lexicon
from .features.websearch import FixtureSearchBackend, HttpSearchBackend
from .kb import Taxonomy, load_taxonomy
from .ranker import RankConfig, RankModel, load_model, rank
from .topics import TopicModel, load_topic_model

logger = logging.getLogger(__name__)


class ServiceError(RuntimeError):
    pass


@dataclass
class ServiceConfig:
    taxonomy: str = ""
    taxonomy_format: str = "count_tsv"
    topic_model: str = ""
    embeddings: str = ""
    frequencies: str = ""
    tagger_lexicon: str = ""
    rank_model: str = ""
    contextual_cache: str = ""
    search_fixture: str = ""
    search_endpoint: str = ""
    search_key_env: str = "SEARCH_API_KEY"
    feedback_log: str = "feedback.jsonl"
    host: str = "127.0.0.1"
    port: int = 8000
    ui_dir: str = ""
    pool_size: int = 100  # training-time negative pool
    csg: CsgConfig = field(default_factory=CsgConfig)
    ranker: RankConfig = field(default_factory=RankConfig)

    @classmethod
    def from_dict(cls, raw: dict) -> "ServiceConfig":
        cfg = cls()
        simple = {f.name for f in fields(cls)} - {"csg", "ranker"}
        for name, value in raw.items():
            if name == "csg":
                cfg.csg = CsgConfig(**value)
            elif name == "ranker":
                ranker_kwargs = dict(value)
                pool_size = ranker_kwargs.pop("pool_size", None)
                if pool_size is not None:
                    cfg.pool_size = int(pool_size)
                cfg.ranker = RankConfig(**ranker_kwargs, csg=cfg.csg)
            elif name in simple:
                setattr(cfg, name, value)
            else:
                raise ServiceError(f"unknown config field {name!r}")
        cfg.ranker.csg = cfg.csg
        return cfg

    @classmethod
    def from_file(cls, path: str) -> "ServiceConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                return cls.from_dict(json.load(fh))
        except FileNotFoundError as exc:
            raise ServiceError(f"missing config file: {path}") from exc

    def override(self, **kwargs) -> "ServiceConfig":
        for name, value in kwargs.items():
            if value is not None:
                setattr(self, name, value)
        return self


@dataclass
class AppState:
    config: ServiceConfig
    taxonomy: Taxonomy
    topic_model: TopicModel
    resources: FeatureResources
    model: RankModel
    feedback: "FeedbackStore"


def _load(kind: str, path: str, loader):
    if not path:
        raise ServiceError(f"missing resource: no {kind} configured")
    try:
        return loader(path)
    except FileNotFoundError as exc:
        raise ServiceError(f"missing resource {kind}: {path}") from exc


@dataclass
class ResourceBundle:
    taxonomy: Taxonomy
    topic_model: TopicModel
    resources: FeatureResources


def load_resources(config: ServiceConfig) -> ResourceBundle:
    """Load everything except the rank model, failing fast with the missing name."""
    taxonomy = _load("taxonomy", config.taxonomy,
                     lambda p: load_taxonomy(p, config.taxonomy_format))
    topic_model = _load("topic_model", config.topic_model, load_topic_model)
    embeddings = _load("embeddings", config.embeddings, load_embeddings)
    frequencies = _load("frequencies", config.frequencies, load_frequencies) \
        if config.frequencies else {}
    tagger = LexiconTagger(load_tagger_lexicon(config.tagger_lexicon)) \
        if config.tagger_lexicon else LexiconTagger()

    contextual = None
    if config.contextual_cache:
        contextual = FileCachedContextualProvider(config.contextual_cache)
    search = None
    if config.search_fixture:
        search = _load("search_fixture", config.search_fixture,
                       FixtureSearchBackend.from_file)
    elif config.search_endpoint:
        search = HttpSearchBackend(config.search_endpoint, config.search_key_env)

    return ResourceBundle(
        taxonomy=taxonomy,
        topic_model=topic_model,
        resources=FeatureResources(
            embeddings=embeddings,
            contextual=contextual,
            frequencies=frequencies,
            tagger=tagger,
            search=search,
        ),
    )


def load_state(config: ServiceConfig) -> AppState:
    """Load every configured resource, failing fast with the missing name."""
    bundle = load_resources(config)
    model = _load("rank_model", config.rank_model, load_model)
    if model.feature_schema_version != SCHEMA_VERSION:
        raise ServiceError(
            f"rank model schema v{model.feature_schema_version} does not match v{SCHEMA_VERSION}"
        )
    return AppState(
        config=config,
        taxonomy=bundle.taxonomy,
        topic_model=bundle.topic_model,
        resources=bundle.resources,
        model=model,
        feedback=FeedbackStore(config.feedback_log),
    )


# ---------------------------------------------------------------------------
# feedback persistence


class FeedbackStore:
    """Append-only JSONL log; export is a pure function of the stored records."""

    def __init__(self, path: str):
        self.path = path
        self._lock = threading.Lock()

    def append(self, record: dict) -> int:
        with self._lock:
            count = sum(1 for _ in self._iter_lines())
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
            return count + 1

    def _iter_lines(self):
        try:
            with open(self.path, encoding="utf-8") as fh:
                yield from fh
        except FileNotFoundError:
            return

    def records(self) -> list[dict]:
        out = []
        for line in self._iter_lines():
            line = line.strip()
            if not line:
                continue
            try:
                out.append(json.loads(line))
            except json.JSONDecodeError:
                logger.warning("skipping malformed feedback line")
        return out

    def compact(self) -> int:
        """Rewrite the log keeping only parseable records; returns kept count."""
        with self._lock:
            kept = self.records()
            with open(self.path, "w", encoding="utf-8") as fh:
                for record in kept:
                    fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
            return len(kept)


def feedback_item_id(stem: str, key: str) -> str:
    digest = hashlib.sha1(f"{stem}␟{key}".encode("utf-8")).hexdigest()
    return f"fb-{digest[:12]}"


def export_feedback(store: FeedbackStore, resources: FeatureResources) -> list[str]:
    """Feedback verdicts as training-group records (accepted/edited -> 1, rejected -> 0)."""
    lines = []
    for record in store.records():
        echo = record.get("request", {})
        stem, key = echo.get("stem", ""), echo.get("key", "")
        verdict = record.get("verdict")
        if verdict == "accepted":
            surface, relevance = record.get("surface", ""), 1
        elif verdict == "rejected":
            surface, relevance = record.get("surface", ""), 0
        elif verdict == "edited":
            surface, relevance = record.get("replacement", ""), 1
        else:
            continue
        if not surface:
            continue
        features = extract_features(stem, key, surface, resources, use_web=False)
        lines.append(json.dumps(
            {
                "item_id": feedback_item_id(stem, key),
                "surface": surface,
                "relevance": relevance,
                "features": features.as_list(),
            },
            ensure_ascii=False, sort_keys=True,
        ))
    return lines


# ---------------------------------------------------------------------------
# request/response bodies


class GenerationOptions(BaseModel):
    use_web_score: bool = False
    model_id: str | None = None


class GenerationRequest(BaseModel):
    stem: str
    key: str
    n: int = Field(default=3, ge=1)
    options: GenerationOptions = Field(default_factory=GenerationOptions)


class DistractorOut(BaseModel):
    surface: str
    score: float
    rank: int


class GenerationResponse(BaseModel):
    distractors: list[DistractorOut]
    fallback_used: bool
    timing_ms: float


class FeedbackRequest(BaseModel):
    request: GenerationRequest
    surface: str
    verdict: Literal["accepted", "rejected", "edited"]
    replacement: str | None = None
    timestamp: str | None = None
    session_id: str

    @model_validator(mode="after")
    def _edited_needs_replacement(self):
        if self.verdict == "edited" and not (self.replacement or "").strip():
            raise ValueError("verdict 'edited' requires a non-empty replacement")
        return self


# ---------------------------------------------------------------------------
# application


def create_app(state: AppState) -> FastAPI:
    app = FastAPI(title="clozegen", version="0.1.0")

    @app.get("/v1/health")
    def health():
        return {
            "status": "ok",
            "model_id": state.model.model_id,
            "schema_version": state.model.feature_schema_version,
        }

    @app.get("/v1/models")
    def models():
        return [{
            "model_id": state.model.model_id,
            "kind": state.model.kind,
            "schema_version": state.model.feature_schema_version,
            "trees": len(state.model.trees),
        }]

    @app.post("/v1/distractors", response_model=GenerationResponse)
    def distractors(request: GenerationRequest):
        if request.options.model_id and request.options.model_id != state.model.model_id:
            raise HTTPException(status_code=404,
                                detail=f"unknown model_id {request.options.model_id!r}")
        started = time.perf_counter()
        cfg = RankConfig(
            csg_top=state.config.ranker.csg_top,
            pos_pool=state.config.ranker.pos_pool,
            n=request.n,
            seed=state.config.ranker.seed,
            use_web=request.options.use_web_score,
            csg=state.config.csg,
        )
        ranked = rank(state.model, request.stem, request.key, state.taxonomy,
                      state.topic_model, state.resources, cfg)
        elapsed = (time.perf_counter() - started) * 1000.0
        return GenerationResponse(
            distractors=[
                DistractorOut(surface=s, score=v, rank=i)
                for i, (s, v) in enumerate(ranked.entries, start=1)
            ],
            fallback_used=ranked.fallback_used,
            timing_ms=elapsed,
        )

    @app.post("/v1/feedback")
    def feedback(request: FeedbackRequest):
        record = request.model_dump()
        if not record.get("timestamp"):
            record["timestamp"] = datetime.now(timezone.utc).isoformat()
        stored_id = state.feedback.append(record)
        return {"id": stored_id}

    @app.get("/v1/feedback/export")
    def feedback_export():
        lines = export_feedback(state.feedback, state.resources)
        return PlainTextResponse("\n".join(lines) + ("\n" if lines else ""),
                                 media_type="application/x-ndjson")

    if state.config.ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=state.config.ui_dir, html=True), name="ui")

    return app


def serve(config: ServiceConfig) -> None:
    """Load resources and run the HTTP service until interrupted."""
    import uvicorn

    state = load_state(config)
    app = create_app(state)
    logger.info("serving on %s:%d (model %s)", config.host, config.port,
                state.model.model_id)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
