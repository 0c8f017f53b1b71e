import json

import pytest
from fastapi.testclient import TestClient

from clozegen.ranker import RankConfig, rank
from clozegen.service import (
    ServiceConfig,
    ServiceError,
    create_app,
    export_feedback,
    feedback_item_id,
    load_state,
)

from helpers import build_toy_setup


@pytest.fixture(scope="module")
def deployment(tmp_path_factory):
    root = tmp_path_factory.mktemp("deploy")
    paths = build_toy_setup(root)
    config = ServiceConfig.from_file(paths["config"])
    state = load_state(config)
    return paths, config, state


@pytest.fixture()
def client(deployment, tmp_path):
    paths, config, state = deployment
    # isolate feedback per test
    state.feedback.path = str(tmp_path / "feedback.jsonl")
    return TestClient(create_app(state)), state


def generation_body(stem="The ____ was fed this morning.", key="dog", n=3, **options):
    return {"stem": stem, "key": key, "n": n, "options": options}


class TestHealthAndModels:
    def test_health(self, client):
        http, state = client
        response = http.get("/v1/health")
        assert response.status_code == 200
        assert response.json() == {
            "status": "ok", "model_id": "toy-model", "schema_version": 1,
        }

    def test_models(self, client):
        http, _ = client
        payload = http.get("/v1/models").json()
        assert payload[0]["model_id"] == "toy-model"
        assert payload[0]["kind"] == "lambdamart_listwise"


class TestDistractors:
    def test_matches_in_process_rank(self, client):
        http, state = client
        response = http.post("/v1/distractors", json=generation_body(n=3))
        assert response.status_code == 200
        payload = response.json()
        cfg = RankConfig(csg_top=30, pos_pool=30, n=3, seed=0, use_web=False,
                         csg=state.config.csg)
        expected = rank(state.model, "The ____ was fed this morning.", "dog",
                        state.taxonomy, state.topic_model, state.resources, cfg)
        assert [d["surface"] for d in payload["distractors"]] == expected.surfaces()
        assert [d["score"] for d in payload["distractors"]] == \
            [score for _, score in expected.entries]
        assert [d["rank"] for d in payload["distractors"]] == [1, 2, 3]

    def test_scores_descending_and_capped_at_n(self, client):
        http, _ = client
        payload = http.post("/v1/distractors", json=generation_body(n=2)).json()
        assert len(payload["distractors"]) <= 2
        scores = [d["score"] for d in payload["distractors"]]
        assert scores == sorted(scores, reverse=True)

    def test_unknown_key_uses_fallback(self, client):
        http, _ = client
        payload = http.post(
            "/v1/distractors", json=generation_body(key="zyzzyva")
        ).json()
        assert payload["fallback_used"] is True
        assert payload["distractors"]  # POS-pool results

    def test_identical_requests_identical_minus_timing(self, client):
        http, _ = client
        a = http.post("/v1/distractors", json=generation_body()).json()
        b = http.post("/v1/distractors", json=generation_body()).json()
        a.pop("timing_ms"), b.pop("timing_ms")
        assert a == b

    def test_unknown_model_id_404(self, client):
        http, _ = client
        response = http.post("/v1/distractors",
                             json=generation_body(model_id="other-model"))
        assert response.status_code == 404

    def test_bad_n_rejected(self, client):
        http, _ = client
        assert http.post("/v1/distractors", json=generation_body(n=0)).status_code == 422


class TestFeedback:
    def feedback_body(self, verdict="accepted", surface="cat", replacement=None,
                      stem="The ____ was fed this morning.", key="dog"):
        return {
            "request": generation_body(stem=stem, key=key),
            "surface": surface,
            "verdict": verdict,
            "replacement": replacement,
            "session_id": "s1",
        }

    def test_accept_then_export_one_positive_row(self, client):
        http, state = client
        assert http.post("/v1/feedback", json=self.feedback_body()).status_code == 200
        export = http.get("/v1/feedback/export")
        rows = [json.loads(line) for line in export.text.strip().splitlines()]
        assert len(rows) == 1
        assert rows[0]["relevance"] == 1
        assert rows[0]["surface"] == "cat"
        assert len(rows[0]["features"]) == 33

    def test_edited_without_replacement_rejected(self, client):
        http, _ = client
        response = http.post("/v1/feedback", json=self.feedback_body(verdict="edited"))
        assert response.status_code == 422
        assert "replacement" in response.text

    def test_edited_exports_replacement_as_positive(self, client):
        http, _ = client
        body = self.feedback_body(verdict="edited", surface="cat", replacement="lion")
        http.post("/v1/feedback", json=body)
        rows = [json.loads(line)
                for line in http.get("/v1/feedback/export").text.strip().splitlines()]
        assert rows[0]["surface"] == "lion" and rows[0]["relevance"] == 1

    def test_two_accepts_one_reject_single_group(self, client):
        http, _ = client
        http.post("/v1/feedback", json=self.feedback_body(surface="cat"))
        http.post("/v1/feedback", json=self.feedback_body(surface="horse"))
        http.post("/v1/feedback", json=self.feedback_body(surface="bus", verdict="rejected"))
        rows = [json.loads(line)
                for line in http.get("/v1/feedback/export").text.strip().splitlines()]
        assert len(rows) == 3
        item_ids = {r["item_id"] for r in rows}
        assert item_ids == {feedback_item_id("The ____ was fed this morning.", "dog")}
        assert sorted(r["relevance"] for r in rows) == [0, 1, 1]

    def test_append_only_ids_increment(self, client):
        http, _ = client
        first = http.post("/v1/feedback", json=self.feedback_body()).json()["id"]
        second = http.post("/v1/feedback", json=self.feedback_body()).json()["id"]
        assert second == first + 1

    def test_bad_verdict_rejected(self, client):
        http, _ = client
        response = http.post("/v1/feedback", json=self.feedback_body(verdict="meh"))
        assert response.status_code == 422


class TestExportPurity:
    def test_export_is_pure_function_of_log(self, client):
        http, state = client
        http.post("/v1/feedback", json={
            "request": generation_body(), "surface": "cat",
            "verdict": "accepted", "session_id": "s",
        })
        first = export_feedback(state.feedback, state.resources)
        second = export_feedback(state.feedback, state.resources)
        assert first == second


class TestStartupFailures:
    def test_missing_taxonomy_named(self, deployment, tmp_path):
        paths, config, _ = deployment
        broken = ServiceConfig.from_file(paths["config"])
        broken.taxonomy = str(tmp_path / "nope.tsv")
        with pytest.raises(ServiceError, match="taxonomy"):
            load_state(broken)

    def test_unconfigured_model_named(self, deployment):
        paths, _, _ = deployment
        broken = ServiceConfig.from_file(paths["config"])
        broken.rank_model = ""
        with pytest.raises(ServiceError, match="rank_model"):
            load_state(broken)

    def test_unknown_config_field_rejected(self):
        with pytest.raises(ServiceError, match="unknown config field"):
            ServiceConfig.from_dict({"no_such_field": 1})
