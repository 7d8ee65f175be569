"""HTTP+JSON API over an analysis session (the workbench backend)."""

from __future__ import annotations

import threading

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from archrec.architecture.snapshot import reassign_and_refresh, snapshot_to_dict
from archrec.retrieval.rank import UnanswerableQuery, map_entities, query_classes
from archrec.retrieval.vectors import IdfTable, cluster_vectors, stemmed_projection
from archrec.service.pipeline import AnalysisSession


class ReassignMove(BaseModel):
    entity: int | str
    to: int | str = Field(description="target cluster index or 'new'")


class ReassignBody(BaseModel):
    moves: list[ReassignMove]
    expectedVersion: str | None = None


class QueryBody(BaseModel):
    text: str
    alpha: float = 0.6
    beta: float = 0.4


class MapEntitiesBody(BaseModel):
    descriptions: list[str]
    theta: float | None = None


def create_app(session: AnalysisSession) -> FastAPI:
    app = FastAPI(title="archrec", version="0.1.0")
    state = {"session": session}
    write_lock = threading.Lock()

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"detail": [
                {"loc": [str(x) for x in err["loc"]], "msg": err["msg"]}
                for err in exc.errors()
            ]},
        )

    def current() -> AnalysisSession:
        return state["session"]

    @app.get("/snapshot")
    def get_snapshot():
        return snapshot_to_dict(current().snapshot)

    @app.get("/clusters")
    def get_clusters():
        s = current().snapshot
        labels = {l.cluster: l for l in s.labels}
        return [
            {
                "id": ci,
                "members": members,
                "memberNames": [s.entity_names[v] for v in members],
                "label": [c for c, _ in labels[ci].concepts] if ci in labels else [],
                "centroid": labels[ci].centroid if ci in labels else -1,
            }
            for ci, members in enumerate(s.clusters)
        ]

    @app.get("/clusters/{cluster_id}")
    def get_cluster(cluster_id: int):
        s = current().snapshot
        if not 0 <= cluster_id < len(s.clusters):
            raise HTTPException(status_code=404, detail=f"no cluster {cluster_id}")
        interface = next((i for i in s.interfaces if i.cluster == cluster_id), None)
        label = next((l for l in s.labels if l.cluster == cluster_id), None)
        return {
            "id": cluster_id,
            "members": s.clusters[cluster_id],
            "memberNames": [s.entity_names[v] for v in s.clusters[cluster_id]],
            "label": [c for c, _ in label.concepts] if label else [],
            "centroid": label.centroid if label else -1,
            "interface": [
                {"owner": m.owner, "ownerName": s.entity_names[m.owner],
                 "method": m.method, "signature": m.signature}
                for m in (interface.methods if interface else [])
            ],
            "crossLayer": s.cross_layer.get(cluster_id, {}),
        }

    @app.get("/interactions")
    def get_interactions():
        return snapshot_to_dict(current().snapshot)["interactions"]

    @app.get("/borderline")
    def get_borderline():
        return snapshot_to_dict(current().snapshot)["borderline"]

    @app.get("/hierarchy")
    def get_hierarchy():
        return snapshot_to_dict(current().snapshot)["hierarchy"]

    @app.post("/reassign")
    def post_reassign(body: ReassignBody):
        with write_lock:
            session = current()
            if body.expectedVersion and body.expectedVersion != session.snapshot.version:
                raise HTTPException(
                    status_code=409,
                    detail={
                        "reason": "version mismatch",
                        "expected": body.expectedVersion,
                        "actual": session.snapshot.version,
                    },
                )
            outcome = reassign_and_refresh(
                session.corpus,
                session.bundle,
                session.snapshot,
                [(m.entity, m.to) for m in body.moves],
            )
            session.snapshot = outcome.snapshot
            session.result.partition = outcome.partition
            return {
                "version": outcome.snapshot.version,
                "quality": snapshot_to_dict(outcome.snapshot)["quality"],
                "rejected": outcome.rejected,
                "snapshot": snapshot_to_dict(outcome.snapshot),
            }

    @app.post("/query")
    def post_query(body: QueryBody):
        session = current()
        try:
            result = query_classes(
                body.text, session.bundle.features, session.bundle.graph,
                alpha=body.alpha, beta=body.beta,
            )
        except UnanswerableQuery as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        names = session.snapshot.entity_names
        assignment = {v: ci for ci, c in enumerate(session.snapshot.clusters) for v in c}
        def rows(entries):
            return [
                {"classId": cid, "name": names[cid], "score": score,
                 "cluster": assignment.get(cid, -1)}
                for cid, score in entries
            ]
        return {"top": rows(result.top), "full": rows(result.final.entries)}

    @app.post("/map-entities")
    def post_map_entities(body: MapEntitiesBody):
        session = current()
        features = session.bundle.features
        vectors = cluster_vectors(
            session.result.partition,
            features.text,
            stemmed_projection(features.class_names),
        )
        idf_table = IdfTable.from_matrix(features.text_raw)
        theta = body.theta if body.theta is not None else session.config.theta
        mapping = map_entities(body.descriptions, vectors, idf_table, theta)
        return [
            {
                "description": m.description,
                "clusters": [{"cluster": c, "similarity": s} for c, s in m.clusters],
                "diagnostic": m.diagnostic,
            }
            for m in mapping
        ]

    return app


def serve(session: AnalysisSession, host: str = "127.0.0.1", port: int = 8000):
    import uvicorn

    uvicorn.run(create_app(session), host=host, port=port, log_level="info")
