"""Command-line entry points.

Exit codes: 0 success, 1 configuration error, 2 ingestion error, 3 internal.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from archrec.service.config import ConfigError, RunConfig


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--corpus", help="directory of .java files or a corpus.json bundle")
    p.add_argument("--rules", help="scoping rules file")
    p.add_argument("--call-edges", dest="call_edges",
                   help="call-edge file: caller<TAB>callee<TAB>method<TAB>sig")
    p.add_argument("--config", help="JSON config file (flags override it)")
    p.add_argument("--out", dest="out_dir", help="output directory")
    p.add_argument("--factors", help="six comma-separated factors or 'auto'")
    p.add_argument("--temp", type=float, help="annealing start temperature")
    p.add_argument("--cooling", type=float, help="annealing cooling constant")
    p.add_argument("--seed", dest="rng_seed", type=int, help="rng seed")
    p.add_argument("--strategies", help="comma-separated seed strategies")
    p.add_argument("--tau", type=float, help="borderline ratio")
    p.add_argument("--label-k", dest="label_k", type=int, help="concepts per label")
    p.add_argument("--theta", type=float, help="entity-mapping threshold")
    p.add_argument("--eliminate-outliers", dest="eliminate_outliers",
                   action="store_const", const=True, default=None)
    p.add_argument("--trace", dest="write_trace", action="store_const",
                   const=True, default=None, help="write the search trace log")


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig.from_file(args.config) if args.config else RunConfig()
    overrides = {
        key: getattr(args, key, None)
        for key in RunConfig.__dataclass_fields__
        if hasattr(args, key)
    }
    if getattr(args, "factors", None):
        overrides["factors"] = (
            "auto" if args.factors == "auto"
            else [float(x) for x in args.factors.split(",")]
        )
    if getattr(args, "strategies", None):
        overrides["strategies"] = [s.strip() for s in args.strategies.split(",")]
    return cfg.merged(overrides)


def _cmd_analyze(args) -> int:
    from archrec.service.pipeline import run_pipeline

    cfg = _config_from_args(args)
    if not cfg.corpus:
        raise ConfigError("--corpus (or a config file naming one) is required")
    session = run_pipeline(cfg)
    q = session.snapshot.quality
    print(f"analyzed {session.corpus.d} classes -> "
          f"{q.cluster_count} clusters (mq={q.mq:.4f}, mqc={q.mqc:.4f})")
    print(f"snapshot: {Path(cfg.out_dir) / 'snapshot.json'}")
    return 0


def _cmd_export_graphml(args) -> int:
    from archrec.architecture.snapshot import load_snapshot
    from archrec.service.graphml import export_graphml

    snapshot = load_snapshot(args.snapshot)
    out = export_graphml(snapshot, args.out)
    print(f"wrote {out}")
    return 0


def _cmd_serve(args) -> int:
    from archrec.service.api import serve
    from archrec.service.pipeline import load_session

    session = load_session(args.snapshot)
    serve(session, host=args.host, port=args.port)
    return 0


def _cmd_query(args) -> int:
    from archrec.retrieval.rank import UnanswerableQuery, query_classes
    from archrec.service.pipeline import load_session

    session = load_session(args.snapshot)
    try:
        result = query_classes(
            args.text, session.bundle.features, session.bundle.graph,
            alpha=args.alpha, beta=args.beta,
        )
    except UnanswerableQuery as exc:
        print(f"unanswerable query: {exc}", file=sys.stderr)
        return 1
    names = session.snapshot.entity_names
    for rank, (cid, score) in enumerate(result.top, start=1):
        print(f"{rank}. {names[cid]} (rank score {score:.2f})")
    return 0


def _cmd_map_entities(args) -> int:
    from archrec.retrieval.rank import map_entities
    from archrec.retrieval.vectors import IdfTable, cluster_vectors, stemmed_projection
    from archrec.service.pipeline import load_session

    session = load_session(args.snapshot)
    descriptions = [
        line.strip()
        for line in Path(args.file).read_text(encoding="utf-8").splitlines()
        if line.strip()
    ]
    features = session.bundle.features
    vectors = cluster_vectors(
        session.result.partition, features.text, stemmed_projection(features.class_names)
    )
    mapping = map_entities(
        descriptions, vectors, IdfTable.from_matrix(features.text_raw), args.theta
    )
    report = [
        {
            "description": m.description,
            "clusters": [{"cluster": c, "similarity": s} for c, s in m.clusters],
            "diagnostic": m.diagnostic,
        }
        for m in mapping
    ]
    print(json.dumps(report, indent=2))
    return 0


def _cmd_portfolio(args) -> int:
    from archrec.clustering.search import SearchConfig
    from archrec.ingest.corpus import ingest_directory
    from archrec.ingest.scanner import read_call_edge_file
    from archrec.portfolio import app_similarity, cluster_apps

    manifest = json.loads(Path(args.manifest).read_text(encoding="utf-8"))
    if not isinstance(manifest.get("apps"), dict) or len(manifest["apps"]) < 2:
        raise ConfigError("manifest must map >= 2 app names to source directories")
    base = Path(args.manifest).parent
    apps = {
        name: ingest_directory(base / root)
        for name, root in sorted(manifest["apps"].items())
    }
    cross = (
        read_call_edge_file(base / manifest["crossCalls"])
        if manifest.get("crossCalls")
        else []
    )
    pg = app_similarity(apps, cross)
    _, report = cluster_apps(pg, SearchConfig(rng_seed=args.rng_seed))
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"portfolio of {len(apps)} apps -> {len(report['groups'])} groups; wrote {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="archrec",
        description="Recover component architecture from a source corpus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run the full pipeline and write a snapshot")
    _add_run_flags(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("export-graphml", help="export the interaction graph")
    p.add_argument("--snapshot", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_export_graphml)

    p = sub.add_parser("serve", help="serve the workbench HTTP API")
    p.add_argument("--snapshot", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("query", help="rank classes against a query string")
    p.add_argument("--snapshot", required=True)
    p.add_argument("--text", required=True)
    p.add_argument("--alpha", type=float, default=0.6)
    p.add_argument("--beta", type=float, default=0.4)
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("map-entities", help="map functional descriptions to clusters")
    p.add_argument("--snapshot", required=True)
    p.add_argument("--file", required=True, help="one description per line")
    p.add_argument("--theta", type=float, default=0.1)
    p.set_defaults(func=_cmd_map_entities)

    p = sub.add_parser("portfolio", help="cluster whole applications")
    p.add_argument("--manifest", required=True,
                   help='JSON: {"apps": {name: dir}, "crossCalls": optional edge file}')
    p.add_argument("--out", required=True)
    p.add_argument("--seed", dest="rng_seed", type=int, default=0)
    p.set_defaults(func=_cmd_portfolio)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        from archrec.service.pipeline import IngestionError

        if isinstance(exc, IngestionError):
            print(f"ingestion error: {exc}", file=sys.stderr)
            return 2
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
