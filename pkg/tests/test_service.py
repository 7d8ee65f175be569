"""Config validation, pipeline determinism, GraphML golden file, API, CLI."""

import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from archrec.architecture.snapshot import load_snapshot, snapshot_to_dict
from archrec.service import (
    ConfigError,
    RunConfig,
    analyze,
    graphml_text,
    run_pipeline,
    strip_timestamp,
)
from archrec.service.api import create_app
from archrec.service.cli import main
from archrec.service.graphml import export_graphml
from archrec.service.pipeline import load_session

FIXTURE = str(Path(__file__).parent / "fixtures" / "demo_corpus")
GOLDEN = Path(__file__).parent / "fixtures" / "golden" / "interactions.graphml"


def fixture_config(**overrides):
    base = dict(corpus=FIXTURE, rng_seed=7)
    base.update(overrides)
    return RunConfig(**base)


@pytest.fixture(scope="module")
def session():
    return analyze(fixture_config())


@pytest.fixture()
def client(session):
    return TestClient(create_app(session))


class TestRunConfig:
    def test_factor_sum_rejected_with_values(self):
        cfg = RunConfig(factors=[0.3, 0.3, 0.1, 0.1, 0.1, 0.0])
        with pytest.raises(ConfigError) as err:
            cfg.validate()
        assert "0.3" in str(err.value)

    def test_wrong_factor_count(self):
        with pytest.raises(ConfigError):
            RunConfig(factors=[0.5, 0.5]).validate()

    def test_auto_factors_allowed(self):
        RunConfig(factors="auto").validate()

    def test_unknown_strategy_rejected(self):
        with pytest.raises(ConfigError):
            RunConfig(strategies=["cc", "magic"]).validate()

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps({"corpus": FIXTURE, "rng_seed": 3}), encoding="utf-8")
        cfg = RunConfig.from_file(path)
        assert cfg.rng_seed == 3

    def test_unknown_config_key_rejected(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps({"corpse": FIXTURE}), encoding="utf-8")
        with pytest.raises(ConfigError):
            RunConfig.from_file(path)

    def test_fingerprint_stable(self):
        assert fixture_config().fingerprint() == fixture_config().fingerprint()
        assert fixture_config().fingerprint() != fixture_config(rng_seed=8).fingerprint()


class TestPipeline:
    def test_fixture_partition_matches_components(self, session):
        names = [
            sorted(session.snapshot.entity_names[v] for v in c)
            for c in session.snapshot.clusters
        ]
        assert sorted(names) == [
            ["MetricsCollector", "ReportBuilder", "ReportFormatter"],
            ["OrderManager", "OrderStore", "OrderValidator"],
        ]

    def test_deterministic_snapshots(self, tmp_path):
        a = run_pipeline(fixture_config(out_dir=str(tmp_path / "a")))
        b = run_pipeline(fixture_config(out_dir=str(tmp_path / "b")))
        text_a = (tmp_path / "a" / "snapshot.json").read_text(encoding="utf-8")
        text_b = (tmp_path / "b" / "snapshot.json").read_text(encoding="utf-8")
        assert strip_timestamp(text_a) == strip_timestamp(text_b)
        assert a.snapshot.version == b.snapshot.version

    def test_outputs_written(self, tmp_path):
        run_pipeline(fixture_config(out_dir=str(tmp_path / "out"), write_trace=True))
        for name in ("corpus.json", "similarity.json", "snapshot.json", "trace.log"):
            assert (tmp_path / "out" / name).exists()

    def test_snapshot_round_trip(self, tmp_path):
        run_pipeline(fixture_config(out_dir=str(tmp_path / "out")))
        loaded = load_snapshot(tmp_path / "out" / "snapshot.json")
        original = json.loads((tmp_path / "out" / "snapshot.json").read_text())
        assert snapshot_to_dict(loaded) == original

    def test_bad_corpus_is_ingestion_error(self):
        from archrec.service.pipeline import IngestionError

        with pytest.raises(IngestionError):
            analyze(RunConfig(corpus="/nonexistent/path"))

    def test_session_reload_preserves_snapshot(self, tmp_path):
        run_pipeline(fixture_config(out_dir=str(tmp_path / "out")))
        session = load_session(tmp_path / "out" / "snapshot.json")
        reloaded = snapshot_to_dict(session.snapshot)
        original = json.loads((tmp_path / "out" / "snapshot.json").read_text())
        assert reloaded == original


class TestGraphml:
    def test_matches_golden_file(self, session):
        assert graphml_text(session.snapshot) == GOLDEN.read_text(encoding="utf-8")

    def test_re_export_is_byte_identical(self, session, tmp_path):
        first = export_graphml(session.snapshot, tmp_path / "a.graphml")
        second = export_graphml(session.snapshot, tmp_path / "b.graphml")
        assert first.read_bytes() == second.read_bytes()

    def test_edgeless_graph_still_valid(self, session):
        import xml.etree.ElementTree as ET

        from archrec.architecture.snapshot import reassign_and_refresh

        # single cluster -> no interactions
        merged = reassign_and_refresh(
            session.corpus, session.bundle, session.snapshot,
            [(v, 0) for v in range(session.corpus.d)],
        )
        text = graphml_text(merged.snapshot)
        root = ET.fromstring(text)
        ns = "{http://graphml.graphdrawing.org/xmlns}"
        assert len(root.findall(f"{ns}graph/{ns}node")) == 1
        assert root.findall(f"{ns}graph/{ns}edge") == []

    def test_golden_parses_with_expected_structure(self):
        import xml.etree.ElementTree as ET

        root = ET.fromstring(GOLDEN.read_text(encoding="utf-8"))
        ns = "{http://graphml.graphdrawing.org/xmlns}"
        graph = root.find(f"{ns}graph")
        assert graph.get("edgedefault") == "directed"
        edge = graph.find(f"{ns}edge")
        assert edge.get("source") == "c1" and edge.get("target") == "c0"
        assert edge.find(f"{ns}data").text == "ReportBuilder.build"


class TestApi:
    def test_get_snapshot_and_clusters(self, client, session):
        snap = client.get("/snapshot").json()
        assert snap["version"] == session.snapshot.version
        clusters = client.get("/clusters").json()
        assert len(clusters) == len(session.snapshot.clusters)

    def test_cluster_detail_and_404(self, client):
        detail = client.get("/clusters/0").json()
        assert detail["memberNames"]
        assert client.get("/clusters/99").status_code == 404

    def test_interactions_borderline_hierarchy(self, client):
        assert client.get("/interactions").json()["edges"]
        assert client.get("/borderline").status_code == 200
        assert client.get("/hierarchy").json()["levels"]

    def test_reassign_round_trip_restores_snapshot(self, session):
        client = TestClient(create_app(analyze(fixture_config())))
        before = client.get("/snapshot").json()
        move = client.post(
            "/reassign",
            json={"moves": [{"entity": "OrderValidator", "to": 1}],
                  "expectedVersion": before["version"]},
        )
        assert move.status_code == 200
        assert move.json()["version"] != before["version"]
        back = client.post(
            "/reassign", json={"moves": [{"entity": "OrderValidator", "to": 0}]}
        ).json()
        assert back["version"] == before["version"]
        after = client.get("/snapshot").json()
        assert strip_json(after) == strip_json(before)

    def test_reassign_version_conflict(self, client):
        response = client.post(
            "/reassign", json={"moves": [], "expectedVersion": "stale"}
        )
        assert response.status_code == 409

    def test_reassign_rejects_unknown_entity(self, session):
        client = TestClient(create_app(analyze(fixture_config())))
        out = client.post("/reassign", json={"moves": [{"entity": "Ghost", "to": 0}]})
        assert out.json()["rejected"][0]["reason"] == "unknown entity"

    def test_malformed_body_is_400(self, client):
        assert client.post("/reassign", json={"bogus": True}).status_code == 400
        detail = client.post("/reassign", json={"bogus": True}).json()["detail"]
        assert any("moves" in err["loc"] for err in detail)

    def test_query_ranks_order_class_first(self, client):
        result = client.post("/query", json={"text": "submit customer order"}).json()
        assert result["top"][0]["name"].startswith("Order")
        assert len(result["full"]) == 6

    def test_unanswerable_query_is_400(self, client):
        assert client.post("/query", json={"text": "the of and"}).status_code == 400

    def test_map_entities_endpoint(self, client):
        result = client.post(
            "/map-entities",
            json={"descriptions": ["order validation rules", "sales report tables"]},
        ).json()
        assert result[0]["clusters"][0]["cluster"] == 0
        assert result[1]["clusters"][0]["cluster"] == 1


def strip_json(snapshot_dict):
    return {k: v for k, v in snapshot_dict.items() if k != "createdAt"}


class TestCli:
    def test_analyze_and_export(self, tmp_path, capsys):
        out = tmp_path / "out"
        code = main(["analyze", "--corpus", FIXTURE, "--out", str(out), "--seed", "7"])
        assert code == 0
        assert (out / "snapshot.json").exists()
        code = main([
            "export-graphml", "--snapshot", str(out / "snapshot.json"),
            "--out", str(tmp_path / "ig.graphml"),
        ])
        assert code == 0
        assert (tmp_path / "ig.graphml").read_text(encoding="utf-8") == GOLDEN.read_text(
            encoding="utf-8"
        )

    def test_query_command(self, tmp_path, capsys):
        out = tmp_path / "out"
        main(["analyze", "--corpus", FIXTURE, "--out", str(out), "--seed", "7"])
        capsys.readouterr()
        code = main(["query", "--snapshot", str(out / "snapshot.json"),
                     "--text", "validate order rules"])
        assert code == 0
        printed = capsys.readouterr().out
        assert "1." in printed and "Order" in printed

    def test_map_entities_command(self, tmp_path, capsys):
        out = tmp_path / "out"
        main(["analyze", "--corpus", FIXTURE, "--out", str(out), "--seed", "7"])
        descriptions = tmp_path / "fe.txt"
        descriptions.write_text("order validation\nsales reports\n", encoding="utf-8")
        capsys.readouterr()
        code = main(["map-entities", "--snapshot", str(out / "snapshot.json"),
                     "--file", str(descriptions)])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert len(report) == 2

    def test_config_error_exit_code(self, capsys):
        code = main(["analyze", "--corpus", FIXTURE, "--factors", "0.5,0.5"])
        assert code == 1

    def test_ingestion_error_exit_code(self, capsys):
        code = main(["analyze", "--corpus", "/nope/nothing"])
        assert code == 2

    def test_portfolio_command(self, tmp_path, capsys):
        apps_root = tmp_path / "apps"
        for app, theme in (("shopA", "order invoice"), ("shopB", "order basket")):
            d = apps_root / app
            d.mkdir(parents=True)
            (d / "Main.java").write_text(
                f"package {app};\n/** {theme} service. */\n"
                f"public class {app.title()}Main {{ public void run() {{ }} }}\n",
                encoding="utf-8",
            )
        manifest = tmp_path / "portfolio.json"
        manifest.write_text(json.dumps({
            "apps": {"shopA": "apps/shopA", "shopB": "apps/shopB"}
        }), encoding="utf-8")
        code = main(["portfolio", "--manifest", str(manifest),
                     "--out", str(tmp_path / "report.json")])
        assert code == 0
        report = json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))
        assert sorted(x for g in report["groups"] for x in g) == ["shopA", "shopB"]
