"""HTTP facade over the interpretation engine.

Sessions live in memory with an idle TTL; requests for the same session
are serialized behind a per-session lock while different sessions run
in parallel. Every error leaves as a flat ``{code, message, detail}``
body so clients only ever parse two shapes.
"""

from __future__ import annotations

import threading
import time
from typing import Callable

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from .config import Resources, load_resources
from .data_manager import Dataset, load_dataset
from .errors import (
    EngineError,
    NoCooccurrence,
    NotSupported,
    RefineError,
    UnintelligibleQuery,
)
from .interpreter import Interpretation, Interpreter, Session, new_session
from .visspec import ChartSpec, ProvenanceText, build_provenance, choose_chart

SESSION_TTL_SECONDS = 60 * 60

_STATUS_BY_CODE = {
    "bad_request": 400,
    "not_found": 404,
    "conflict": 409,
    "unintelligible": 422,
    "no_cooccurrence": 422,
    "not_supported": 422,
    "refine_error": 422,
}


class ApiFault(Exception):
    """Raised by endpoint bodies for non-engine failures (404/409)."""

    def __init__(self, code: str, message: str, detail: str = ""):
        super().__init__(message)
        self.code = code
        self.message = message
        self.detail = detail


def _error_response(code: str, message: str, detail: str = "") -> JSONResponse:
    status = _STATUS_BY_CODE.get(code, 400)
    return JSONResponse(
        status_code=status,
        content={"code": code, "message": message, "detail": detail},
    )


def _engine_error_code(exc: EngineError) -> str:
    if isinstance(exc, UnintelligibleQuery):
        return "unintelligible"
    if isinstance(exc, NoCooccurrence):
        return "no_cooccurrence"
    if isinstance(exc, NotSupported):
        return "not_supported"
    if isinstance(exc, RefineError):
        return "refine_error"
    return "bad_request"


# --- request bodies ----------------------------------------------------


class DatasetUpload(BaseModel):
    name: str
    csv: str


class SessionCreate(BaseModel):
    dataset: str


class InterpretRequest(BaseModel):
    utterance: str


class RefineRequest(BaseModel):
    action: str
    attribute: str
    lo: float | None = None
    hi: float | None = None


# --- serialization -----------------------------------------------------


def serialize_dataset(dataset: Dataset) -> dict:
    attributes = []
    for attr in dataset.attributes:
        stats = None
        if attr.stats is not None:
            stats = {
                "min": attr.stats.min,
                "max": attr.stats.max,
                "median": attr.stats.median,
                "mad": attr.stats.mad,
                "count": attr.stats.count,
                "null_count": attr.stats.null_count,
            }
        attributes.append(
            {
                "name": attr.display_name,
                "raw_name": attr.raw_name,
                "kind": attr.kind.value,
                "stats": stats,
            }
        )
    return {"name": dataset.name, "attributes": attributes, "row_count": len(dataset.rows)}


def _serialize_filter(f) -> dict:
    return {
        "attribute": f.attribute,
        "lo": f.lo,
        "hi": f.hi,
        "provenance": f.provenance.value,
        "source_label": f.source_label,
        "source_url": f.source_url,
    }


def _serialize_verdict(v) -> dict:
    return {"phrase": v.phrase, "class": v.klass.value, "score": v.score}


def _serialize_widget(w) -> dict:
    return {
        "attribute": w.attribute,
        "kind": w.kind.value,
        "current": _serialize_filter(w.current),
        "bounds": [w.bounds[0], w.bounds[1]],
    }


def serialize_interpretation(interp: Interpretation) -> dict:
    modifier = None
    if interp.query.modifier is not None:
        m = interp.query.modifier
        modifier = {
            "text": m.token.text,
            "lemma": m.token.lemma,
            "classification": m.classification.value,
            "negated": m.negated,
        }
    return {
        "utterance": interp.query.utterance,
        "modifier": modifier,
        "modifier_sentiment": (
            _serialize_verdict(interp.modifier_verdict)
            if interp.modifier_verdict is not None
            else None
        ),
        "scored": [
            {
                "attribute": s.attribute,
                "pmi": s.pmi,
                "modifier_ngram": s.modifier_ngram,
                "attribute_ngram": s.attribute_ngram,
                "cooccurring": s.cooccurring,
            }
            for s in interp.scored
        ],
        "verdicts": {
            name: {
                "kind": d.kind.value,
                "modifier": _serialize_verdict(d.modifier_verdict),
                "attribute": _serialize_verdict(d.attribute_verdict),
            }
            for name, d in interp.verdicts.items()
        },
        "filters": [_serialize_filter(f) for f in interp.filters],
        "widgets": [_serialize_widget(w) for w in interp.widgets],
        "active": list(interp.active),
        "warnings": list(interp.warnings),
    }


def serialize_chart(chart: ChartSpec) -> dict:
    return {
        "mark": chart.mark.value,
        "encodings": dict(chart.encodings),
        "data_filter": [_serialize_filter(f) for f in chart.data_filter],
        "title": chart.title,
        "rows": [dict(r) for r in chart.rows],
        "sampled": chart.sampled,
    }


def serialize_provenance(prov: ProvenanceText) -> dict:
    return {
        "segments": [
            {
                "text": s.text,
                "sentiment": s.sentiment.value if s.sentiment is not None else None,
                "widget": _serialize_widget(s.widget) if s.widget is not None else None,
                "link": s.link,
            }
            for s in prov.segments
        ]
    }


# --- session store ------------------------------------------------------


class SessionStore:
    """In-memory sessions with an idle TTL and a lock per session."""

    def __init__(self, ttl_seconds: float = SESSION_TTL_SECONDS, clock: Callable[[], float] = time.time):
        self.ttl = ttl_seconds
        self.clock = clock
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    def create(self, dataset: Dataset) -> Session:
        session = new_session(dataset, clock=self.clock)
        with self._guard:
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()
        return session

    def _purge(self, now: float) -> None:
        dead = [sid for sid, s in self._sessions.items() if now - s.last_active > self.ttl]
        for sid in dead:
            self._sessions.pop(sid, None)
            self._locks.pop(sid, None)

    def get(self, session_id: str) -> tuple[Session, threading.Lock]:
        now = self.clock()
        with self._guard:
            self._purge(now)
            session = self._sessions.get(session_id)
            if session is None:
                raise ApiFault("not_found", f"Unknown or expired session '{session_id}'.")
            session.last_active = now
            return session, self._locks[session_id]


# --- app ----------------------------------------------------------------


def create_app(
    resources: Resources | None = None,
    datasets: dict[str, Dataset] | None = None,
    *,
    ttl_seconds: float = SESSION_TTL_SECONDS,
    clock: Callable[[], float] = time.time,
    cors_origins: list[str] | None = None,
) -> FastAPI:
    resources = resources or load_resources()
    app = FastAPI(title="vaguequery", docs_url=None, redoc_url=None)
    if cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=cors_origins,
            allow_methods=["*"],
            allow_headers=["*"],
        )

    engine = Interpreter(resources)
    registry: dict[str, Dataset] = dict(datasets or {})
    registry_guard = threading.Lock()
    store = SessionStore(ttl_seconds=ttl_seconds, clock=clock)

    app.state.store = store
    app.state.datasets = registry

    @app.exception_handler(ApiFault)
    async def _fault_handler(request: Request, exc: ApiFault):
        return _error_response(exc.code, exc.message, exc.detail)

    @app.exception_handler(EngineError)
    async def _engine_handler(request: Request, exc: EngineError):
        return _error_response(_engine_error_code(exc), exc.message, exc.detail)

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(request: Request, exc: RequestValidationError):
        return _error_response("bad_request", "Request body failed validation.", str(exc.errors()))

    @app.exception_handler(StarletteHTTPException)
    async def _http_handler(request: Request, exc: StarletteHTTPException):
        code = {404: "not_found", 405: "bad_request", 409: "conflict"}.get(
            exc.status_code, "bad_request"
        )
        return JSONResponse(
            status_code=exc.status_code,
            content={"code": code, "message": str(exc.detail), "detail": ""},
        )

    def _respond(session: Session, interpretation: Interpretation) -> dict:
        chart = choose_chart(interpretation, session.dataset)
        prov = build_provenance(interpretation)
        return {
            "session_id": session.id,
            "interpretation": serialize_interpretation(interpretation),
            "chart_spec": serialize_chart(chart),
            "provenance_text": serialize_provenance(prov),
        }

    @app.post("/datasets")
    def upload_dataset(body: DatasetUpload):
        if not body.name.strip():
            raise ApiFault("bad_request", "Dataset name must not be empty.")
        dataset = load_dataset(body.csv, name=body.name)
        with registry_guard:
            if body.name in registry:
                raise ApiFault("conflict", f"A dataset named '{body.name}' already exists.")
            registry[body.name] = dataset
        return serialize_dataset(dataset)

    @app.get("/datasets")
    def list_datasets():
        with registry_guard:
            return {"datasets": [serialize_dataset(d) for d in registry.values()]}

    @app.post("/sessions")
    def create_session(body: SessionCreate):
        with registry_guard:
            dataset = registry.get(body.dataset)
        if dataset is None:
            raise ApiFault("not_found", f"No dataset named '{body.dataset}'.")
        session = store.create(dataset)
        return {"session_id": session.id, "dataset": serialize_dataset(dataset)}

    @app.post("/sessions/{session_id}/interpret")
    def interpret(session_id: str, body: InterpretRequest):
        session, lock = store.get(session_id)
        with lock:
            interpretation = engine.interpret(body.utterance, session)
            return _respond(session, interpretation)

    @app.post("/sessions/{session_id}/refine")
    def refine(session_id: str, body: RefineRequest):
        session, lock = store.get(session_id)
        with lock:
            if body.action == "set_range":
                if body.lo is None or body.hi is None:
                    raise ApiFault(
                        "bad_request", "set_range requires numeric 'lo' and 'hi'."
                    )
                interpretation = engine.refine_range(session, body.attribute, body.lo, body.hi)
            elif body.action == "add_attribute":
                interpretation = engine.add_attribute(session, body.attribute)
            elif body.action == "remove_attribute":
                interpretation = engine.remove_attribute(session, body.attribute)
            else:
                raise ApiFault(
                    "bad_request",
                    "action must be one of set_range, add_attribute, remove_attribute.",
                    detail=f"got: {body.action!r}",
                )
            return _respond(session, interpretation)

    @app.get("/sessions/{session_id}")
    def session_state(session_id: str):
        session, lock = store.get(session_id)
        with lock:
            state = session.state
            last = session.last_interpretation
            return {
                "session_id": session.id,
                "dataset": session.dataset.name,
                "last_utterance": session.last_utterance,
                "active": list(last.active) if last is not None else [],
                "overrides": {
                    name: {"lo": lo, "hi": hi} for name, (lo, hi) in state.overrides.items()
                },
                "added": list(state.added),
                "removed": sorted(state.removed),
                "last_interpretation": (
                    serialize_interpretation(last) if last is not None else None
                ),
            }

    return app
