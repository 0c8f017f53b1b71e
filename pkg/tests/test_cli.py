import json

import pytest

from clozegen.cli import main
from clozegen.corpus import ClozeItem, Dataset, save_dataset
from clozegen.ranker import load_groups, save_groups

from helpers import build_toy_setup
from test_ranker import separable_groups


@pytest.fixture(scope="module")
def deployment(tmp_path_factory):
    root = tmp_path_factory.mktemp("cli-deploy")
    return build_toy_setup(root)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStats:
    def test_stats_outputs_report(self, deployment, capsys):
        code, out, err = run_cli(capsys, "stats", "--dataset", deployment["dataset"])
        assert code == 0
        payload = json.loads(out)
        assert payload["total"] == 4
        assert sum(payload["domain_counts"].values()) == 4

    def test_missing_file_is_one_line_error(self, capsys):
        code, out, err = run_cli(capsys, "stats", "--dataset", "/nope/missing.jsonl")
        assert code == 1
        assert len(err.strip().splitlines()) == 1
        assert "error" in json.loads(err)


class TestLdaTrain:
    def test_trains_and_is_byte_deterministic(self, deployment, tmp_path, capsys):
        out1, out2 = str(tmp_path / "m1.json"), str(tmp_path / "m2.json")
        for out in (out1, out2):
            code, _, _ = run_cli(capsys, "lda-train", "--corpus", deployment["corpus"],
                                 "--k", "2", "--iterations", "30", "--seed", "5",
                                 "--out", out)
            assert code == 0
        with open(out1, "rb") as f1, open(out2, "rb") as f2:
            assert f1.read() == f2.read()


class TestCsgAndRankComposition:
    STEM = "The ____ was fed this morning."

    def test_csg_prints_candidates(self, deployment, capsys):
        code, out, _ = run_cli(capsys, "csg", "--config", deployment["config"],
                               "--stem", self.STEM, "--key", "dog")
        assert code == 0
        payload = json.loads(out)
        assert payload["candidates"]
        assert payload["needs_fallback"] is False
        assert "dog" not in [c["surface"] for c in payload["candidates"]]

    def test_generate_equals_csg_plus_rank(self, deployment, tmp_path, capsys):
        candidates = str(tmp_path / "candidates.jsonl")
        code, _, _ = run_cli(capsys, "csg", "--config", deployment["config"],
                             "--stem", self.STEM, "--key", "dog",
                             "--m", "30", "--out", candidates)
        assert code == 0
        code, ranked_out, _ = run_cli(capsys, "rank", "--config", deployment["config"],
                                      "--candidates", candidates,
                                      "--stem", self.STEM, "--key", "dog", "--n", "3")
        assert code == 0
        code, generated_out, _ = run_cli(capsys, "generate", "--config",
                                         deployment["config"], "--stem", self.STEM,
                                         "--key", "dog", "--n", "3")
        assert code == 0
        assert json.loads(generated_out) == json.loads(ranked_out)

    def test_generate_byte_identical_across_runs(self, deployment, tmp_path, capsys):
        outs = []
        for name in ("g1.json", "g2.json"):
            out = str(tmp_path / name)
            code, _, _ = run_cli(capsys, "generate", "--config", deployment["config"],
                                 "--stem", self.STEM, "--key", "dog", "--seed", "3",
                                 "--out", out)
            assert code == 0
            outs.append(out)
        with open(outs[0], "rb") as f1, open(outs[1], "rb") as f2:
            assert f1.read() == f2.read()


class TestTrain:
    def test_train_from_groups_byte_identical(self, tmp_path, capsys):
        groups_path = str(tmp_path / "groups.jsonl")
        save_groups(separable_groups(seed=1), groups_path)
        models = []
        for name in ("m1.json", "m2.json"):
            out = str(tmp_path / name)
            code, _, _ = run_cli(capsys, "train", "--groups", groups_path,
                                 "--kind", "lambdamart_listwise", "--rounds", "10",
                                 "--min-rows-per-leaf", "2", "--seed", "7",
                                 "--out", out)
            assert code == 0
            models.append(out)
        with open(models[0], "rb") as f1, open(models[1], "rb") as f2:
            assert f1.read() == f2.read()

    def test_single_class_data_names_missing_class(self, tmp_path, capsys):
        groups = separable_groups(seed=2)
        only_pos = []
        for g in groups:
            g.rows = [r for r in g.rows if r[2] == 1]
            only_pos.append(g)
        groups_path = str(tmp_path / "pos_only.jsonl")
        save_groups(only_pos, groups_path)
        code, _, err = run_cli(capsys, "train", "--groups", groups_path,
                               "--kind", "pointwise_boost", "--out",
                               str(tmp_path / "m.json"))
        assert code == 1
        payload = json.loads(err)
        assert "negative" in payload["error"]

    def test_train_from_dataset(self, deployment, tmp_path, capsys):
        out = str(tmp_path / "model.json")
        groups_out = str(tmp_path / "groups.jsonl")
        code, _, _ = run_cli(capsys, "train", "--config", deployment["config"],
                             "--dataset", deployment["dataset"],
                             "--kind", "pointwise_boost", "--rounds", "10",
                             "--pool-size", "20", "--save-groups", groups_out,
                             "--out", out)
        assert code == 0
        assert load_groups(groups_out)
        with open(out, encoding="utf-8") as fh:
            assert json.load(fh)["kind"] == "pointwise_boost"


class TestEval:
    def test_perfect_run_scores_one(self, tmp_path, capsys):
        dataset_path = str(tmp_path / "data.jsonl")
        save_dataset(Dataset([
            ClozeItem(id="q0", domain="science", stem="A ____ here.", key="k0",
                      distractors=("a", "b", "c")),
        ]), dataset_path)
        run_path = str(tmp_path / "run.jsonl")
        with open(run_path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps({
                "item_id": "q0",
                "ranked": [{"surface": s, "score": 3.0 - i}
                           for i, s in enumerate(["a", "b", "c"])],
            }) + "\n")
        code, out, _ = run_cli(capsys, "eval", "--run", run_path,
                               "--dataset", dataset_path, "--json")
        assert code == 0
        payload = json.loads(out)
        assert all(v == 1.0 for v in payload["overall"].values())

    def test_table_output(self, tmp_path, capsys):
        dataset_path = str(tmp_path / "data.jsonl")
        save_dataset(Dataset([
            ClozeItem(id="q0", domain="trivia", stem="A ____ here.", key="k0",
                      distractors=("a",)),
        ]), dataset_path)
        run_path = str(tmp_path / "run.jsonl")
        with open(run_path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps({"item_id": "q0",
                                 "ranked": [{"surface": "x", "score": 1.0}]}) + "\n")
        code, out, _ = run_cli(capsys, "eval", "--run", run_path,
                               "--dataset", dataset_path)
        assert code == 0
        assert "NDCG@10" in out


class TestErrorContract:
    def test_unknown_key_generate_still_succeeds(self, deployment, capsys):
        code, out, _ = run_cli(capsys, "generate", "--config", deployment["config"],
                               "--stem", "A ____ thing.", "--key", "zyzzyva")
        assert code == 0
        assert json.loads(out)["fallback_used"] is True

    def test_missing_config_resource(self, tmp_path, capsys):
        config_path = str(tmp_path / "bad.json")
        with open(config_path, "w", encoding="utf-8") as fh:
            json.dump({"taxonomy": str(tmp_path / "missing.tsv")}, fh)
        code, _, err = run_cli(capsys, "generate", "--config", config_path,
                               "--stem", "A ____.", "--key", "dog")
        assert code == 1
        assert "taxonomy" in json.loads(err)["error"]
