"""Scanner, scoping, dependency graph, and corpus round-trip."""

from collections import Counter
from pathlib import Path

import pytest

from archrec.ingest import (
    CallFact,
    CodeEntity,
    MethodSig,
    ScopingError,
    ScopingRules,
    build_corpus,
    build_dependency_graph,
    corpus_from_dict,
    ingest_directory,
    scan_source,
    scope_corpus,
)
from archrec.ingest.corpus import corpus_to_dict
from archrec.ingest.model import extract_inheritance_list, extract_textual_features
from archrec.ingest.scanner import read_call_edge_file

FIXTURE = Path(__file__).parent / "fixtures" / "demo_corpus"


class TestScanner:
    def test_inheritance_example(self):
        scanned = scan_source(
            "class ClientAnalytics implements Business, Analytics, Client { }"
        )
        e = scanned.entities[0]
        assert e.name == "ClientAnalytics"
        assert extract_inheritance_list(e) == {"Business", "Analytics", "Client"}

    def test_extends_and_implements(self):
        scanned = scan_source("class A extends B implements C { }")
        assert scanned.entities[0].inheritance_raw == {"B", "C"}

    def test_no_inheritance(self):
        scanned = scan_source("class A { }")
        assert scanned.entities[0].inheritance_raw == set()

    def test_own_name_removed_from_inheritance(self):
        e = CodeEntity(id=0, name="A", inheritance_raw={"A", "B"})
        assert e.inheritance_raw == {"B"}

    def test_public_members(self):
        scanned = scan_source("""
            package p;
            public class Svc {
                public int count;
                private int hidden;
                public String lookup(int id, String key) { return null; }
                void packagePrivate() { }
            }
        """)
        e = scanned.entities[0]
        assert e.public_variables == ["count"]
        assert [m.name for m in e.public_methods] == ["lookup"]
        assert e.public_methods[0].param_types == ("int", "String")
        assert e.public_methods[0].return_type == "String"
        assert e.packaging == "p"

    def test_comments_attach_to_class(self):
        scanned = scan_source("""
            // file header note
            public class Svc {
                /** Handles widget things. */
                public void go() { }
            }
        """)
        assert scanned.entities[0].comments == ["file header note", "Handles widget things."]

    def test_calls_resolved_via_fields_and_statics(self):
        scanned = scan_source("""
            public class A {
                public B helper;
                public void run() {
                    helper.step();
                    C.stat();
                    this.own();
                    unknownVar.x();
                }
            }
        """)
        calls = {(c.callee, c.method) for c in scanned.calls}
        assert calls == {("B", "step"), ("C", "stat")}

    def test_call_edge_file(self, tmp_path):
        path = tmp_path / "edges.tsv"
        path.write_text("# comment\nA\tB\tm\tm():void\nA\tC\tn\n", encoding="utf-8")
        facts = read_call_edge_file(path)
        assert [(f.caller, f.callee, f.method) for f in facts] == [
            ("A", "B", "m"), ("A", "C", "n"),
        ]

    def test_call_edge_file_rejects_bad_lines(self, tmp_path):
        path = tmp_path / "edges.tsv"
        path.write_text("A,B,m\n", encoding="utf-8")
        with pytest.raises(ValueError):
            read_call_edge_file(path)


class TestTextualFeatures:
    def test_empty_entity(self):
        e = CodeEntity(id=0, name="A")
        assert not extract_textual_features(e)

    def test_comments_and_variables(self):
        e = CodeEntity(
            id=0, name="A",
            comments=["schedules jobs"],
            public_variables=["jobQueue"],
        )
        assert extract_textual_features(e).counts == Counter(
            {"schedul": 1, "job": 2, "queue": 1}
        )

    def test_duplicate_comments_double_counts(self):
        e = CodeEntity(id=0, name="A", comments=["queue", "queue"])
        assert extract_textual_features(e).counts == Counter({"queue": 2})


def _entities(specs):
    return [
        CodeEntity(id=i, name=name, packaging=pkg)
        for i, (name, pkg) in enumerate(specs)
    ]


class TestScoping:
    def test_glob_match_excludes_ui(self):
        entities = _entities([("Widget", "app.ui.widgets"), ("Core", "app.core")])
        rules = ScopingRules(layer_patterns={"UI": ["*.ui.*"]}, use_default_heuristics=False)
        business, excluded, _ = scope_corpus(entities, rules)
        assert [e.name for e in business] == ["Core"]
        assert [e.name for e in excluded["UI"]] == ["Widget"]

    def test_empty_rules_identity(self):
        entities = _entities([("A", "x"), ("B", "y")])
        business, excluded, _ = scope_corpus(entities, ScopingRules(use_default_heuristics=False))
        assert len(business) == 2 and not excluded

    def test_all_excluded_is_fatal(self):
        entities = _entities([("Widget", "app.ui")])
        with pytest.raises(ScopingError):
            scope_corpus(entities, ScopingRules(layer_patterns={"UI": ["*"]}))

    def test_multiplicity_preserved_and_reindexed(self):
        entities = _entities(
            [("A", "app.ui"), ("B", "core"), ("C", "app.util"), ("D", "core")]
        )
        business, excluded, id_map = scope_corpus(entities, ScopingRules())
        total = len(business) + sum(len(v) for v in excluded.values())
        assert total == 4
        assert [e.id for e in business] == [0, 1]
        assert id_map == {1: 0, 3: 1}

    def test_include_overrides_heuristics(self):
        entities = _entities([("Widget", "app.ui")])
        rules = ScopingRules(include_names={"Widget"})
        business, excluded, _ = scope_corpus(entities, rules)
        assert [e.name for e in business] == ["Widget"]

    def test_include_exclude_overlap_rejected(self):
        with pytest.raises(ValueError):
            ScopingRules(include_names={"A"}, exclude_names={"A"})

    def test_rules_file(self, tmp_path):
        path = tmp_path / "rules.txt"
        path.write_text(
            "# layers\nui = *.view.*, *Window\nexclude = Scratch\nheuristics = off\n",
            encoding="utf-8",
        )
        rules = ScopingRules.from_file(path)
        assert rules.layer_patterns == {"UI": ["*.view.*", "*Window"]}
        assert rules.exclude_names == {"Scratch"}
        assert not rules.use_default_heuristics


class TestDependencyGraph:
    def _corpus_entities(self):
        a = CodeEntity(id=0, name="A", public_methods=[MethodSig("run")])
        b = CodeEntity(id=1, name="B", public_methods=[MethodSig("m")])
        return [a, b]

    def test_parallel_edges_kept(self):
        facts = [CallFact("A", "B", "m"), CallFact("A", "B", "m")]
        g = build_dependency_graph(self._corpus_entities(), facts)
        assert len(g.edges) == 2

    def test_no_calls(self):
        g = build_dependency_graph(self._corpus_entities(), [])
        assert g.edges == []

    def test_self_calls_dropped(self):
        g = build_dependency_graph(self._corpus_entities(), [CallFact("A", "A", "run")])
        assert g.edges == []

    def test_unknown_class_skipped(self, caplog):
        g = build_dependency_graph(self._corpus_entities(), [CallFact("A", "Nope", "m")])
        assert g.edges == [] and g.side_edges == []

    def test_non_public_method_skipped(self):
        g = build_dependency_graph(self._corpus_entities(), [CallFact("A", "B", "secret")])
        assert g.edges == []

    def test_excluded_callee_becomes_side_edge(self):
        ui = CodeEntity(id=0, name="Win", public_methods=[MethodSig("show")])
        g = build_dependency_graph(
            self._corpus_entities(),
            [CallFact("A", "Win", "show")],
            excluded={"UI": [ui]},
        )
        assert g.edges == []
        assert [(s.callee_name, s.layer) for s in g.side_edges] == [("Win", "UI")]

    def test_edge_methods_are_public(self):
        entities = self._corpus_entities()
        facts = [CallFact("A", "B", "m"), CallFact("B", "A", "run")]
        g = build_dependency_graph(entities, facts)
        for e in g.edges:
            assert e.method in entities[e.callee].public_method_names()


class TestFixtureCorpus:
    def test_ingest_directory(self):
        corpus = ingest_directory(FIXTURE)
        assert corpus.d == 6
        assert {e.name for e in corpus.entities} == {
            "OrderManager", "OrderStore", "OrderValidator",
            "MetricsCollector", "ReportBuilder", "ReportFormatter",
        }
        assert {layer: [e.name for e in v] for layer, v in corpus.excluded.items()} == {
            "UI": ["ShopWindow"], "Utils": ["TextUtil"],
        }
        assert len(corpus.dep_graph.edges) == 6
        assert len(corpus.dep_graph.side_edges) == 2

    def test_round_trip(self):
        corpus = ingest_directory(FIXTURE)
        clone = corpus_from_dict(corpus_to_dict(corpus))
        assert corpus_to_dict(clone) == corpus_to_dict(corpus)

    def test_build_corpus_requires_entities(self):
        with pytest.raises(ScopingError):
            build_corpus([], [])
