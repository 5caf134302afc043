"""HTTP session service for the lending game, plus stateless analysis routes.

Sessions live in memory, one lock each, so concurrent moves on the same
board serialize while distinct sessions proceed in parallel.  Payloads are
parsed by hand: any malformed body is a 400, an unknown session id is a 404,
and analysis endpoints never mutate anything.  Group orders ride as decimal
strings, like everywhere else in the JSON surface.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from contextlib import asynccontextmanager
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import dollar_game, jacobian
from .divisors import Divisor, divisor_from_json, divisor_to_json
from .errors import GraphConstructionError, ResourceGuardError
from .multigraph import INFINITE, Multigraph, graph_from_json, graph_to_json
from .rank import rank as compute_rank


class _Session:
    def __init__(self, sid: str, state: dollar_game.GameState):
        self.id = sid
        self.state = state
        self.created = time.time()
        self.updated = self.created
        self.lock = threading.Lock()


class _BadPayload(Exception):
    pass


def _parse_board(body) -> dollar_game.GameState:
    if not isinstance(body, dict):
        raise _BadPayload("body must be a JSON object")
    try:
        g = graph_from_json(body.get("graph"))
        d = divisor_from_json(g, body.get("divisor") or {})
    except (GraphConstructionError, ValueError) as exc:
        raise _BadPayload(str(exc)) from exc
    return dollar_game.GameState(g, d)


def _state_json(session: _Session) -> dict:
    state = session.state
    return {
        "id": session.id,
        "graph": graph_to_json(state.graph),
        "config": divisor_to_json(state.graph, state.config),
        "log": [list(mv) for mv in state.log],
        "total": state.total,
        "won": state.is_won(),
        "genus": state.graph.genus(),
    }


def _analysis_json(g: Multigraph) -> dict:
    js = jacobian.jacobian_structure(g)
    conn = g.edge_connectivity()
    return {
        "graph": graph_to_json(g),
        "genus": g.genus(),
        "spanning_tree_count": str(g.spanning_tree_count()),
        "invariant_factors": list(js.nontrivial_factors),
        "edge_connectivity": None if conn is INFINITE else conn,
        "vertex_degrees": {v: g.degree(i) for i, v in enumerate(g.vertices)},
    }


def create_app(snapshot_path: str | None = None, static_dir: str | None = None) -> FastAPI:
    sessions: dict[str, _Session] = {}
    registry_lock = threading.Lock()

    @asynccontextmanager
    async def _lifespan(_app):
        yield
        if snapshot_path is None:
            return
        dump = {
            sid: {
                "state": _state_json(s),
                "created": s.created,
                "updated": s.updated,
            }
            for sid, s in sessions.items()
        }
        Path(snapshot_path).write_text(json.dumps(dump, indent=2))

    app = FastAPI(title="chipfire", docs_url=None, redoc_url=None, lifespan=_lifespan)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    def _bad(detail: str) -> JSONResponse:
        return JSONResponse({"detail": detail}, status_code=400)

    async def _body(request: Request):
        try:
            return json.loads(await request.body() or b"null")
        except json.JSONDecodeError as exc:
            raise _BadPayload(f"invalid JSON: {exc}") from exc

    @app.exception_handler(_BadPayload)
    async def _bad_payload_handler(request, exc):
        return _bad(str(exc))

    @app.exception_handler(ResourceGuardError)
    async def _guard_handler(request, exc):
        return JSONResponse(
            {"detail": f"resource guard tripped: {exc.guard}"}, status_code=422
        )

    @app.get("/health")
    def health():
        return {"status": "ok", "sessions": len(sessions)}

    @app.post("/session")
    async def create_session(request: Request):
        state = _parse_board(await _body(request))
        sid = secrets.token_hex(8)
        session = _Session(sid, state)
        with registry_lock:
            sessions[sid] = session
        return _state_json(session)

    def _get_session(sid: str) -> _Session | None:
        with registry_lock:
            return sessions.get(sid)

    @app.get("/session/{sid}")
    def get_session(sid: str):
        session = _get_session(sid)
        if session is None:
            return JSONResponse({"detail": "unknown session"}, status_code=404)
        with session.lock:
            return _state_json(session)

    @app.post("/session/{sid}/move")
    async def post_move(sid: str, request: Request):
        session = _get_session(sid)
        if session is None:
            return JSONResponse({"detail": "unknown session"}, status_code=404)
        body = await _body(request)
        if not isinstance(body, dict):
            return _bad("body must be a JSON object")
        vertex = body.get("vertex")
        kind = body.get("kind")
        with session.lock:
            g = session.state.graph
            if not isinstance(vertex, str) or vertex not in g.vertices:
                return _bad(f"unknown vertex: {vertex!r}")
            if kind not in ("borrow", "lend"):
                return _bad(f"kind must be 'borrow' or 'lend', got {kind!r}")
            session.state = dollar_game.apply_move(session.state, vertex, kind)
            session.updated = time.time()
            return _state_json(session)

    @app.get("/session/{sid}/hint")
    def hint(sid: str):
        session = _get_session(sid)
        if session is None:
            return JSONResponse({"detail": "unknown session"}, status_code=404)
        with session.lock:
            state = session.state
        winnable = dollar_game.is_winnable(state)
        suggested = None
        if winnable and not state.config.is_effective():
            in_debt = [v for v in range(state.graph.n) if state.config[v] < 0]
            suggested = [state.graph.vertices[in_debt[0]], "borrow"]
        return {
            "winnable": winnable,
            "suggested_move": suggested,
            "rank": compute_rank(state.graph, state.config).value,
        }

    async def _analyze(request: Request):
        body = await _body(request)
        if body is None and "graph" in request.query_params:
            try:
                body = {"graph": json.loads(request.query_params["graph"])}
            except json.JSONDecodeError as exc:
                raise _BadPayload(f"invalid graph query parameter: {exc}") from exc
        if not isinstance(body, dict):
            raise _BadPayload("provide a graph in the body or ?graph= parameter")
        payload = body.get("graph", body)
        try:
            g = graph_from_json(payload)
        except GraphConstructionError as exc:
            raise _BadPayload(str(exc)) from exc
        return _analysis_json(g)

    @app.get("/graph/analyze")
    async def analyze_get(request: Request):
        return await _analyze(request)

    @app.post("/graph/analyze")
    async def analyze_post(request: Request):
        return await _analyze(request)

    @app.post("/rank")
    async def rank_endpoint(request: Request):
        body = await _body(request)
        if not isinstance(body, dict):
            raise _BadPayload("body must be a JSON object")
        try:
            g = graph_from_json(body.get("graph"))
            d = divisor_from_json(g, body.get("divisor") or {})
        except (GraphConstructionError, ValueError) as exc:
            raise _BadPayload(str(exc)) from exc
        result = compute_rank(g, d)
        return {
            "rank": result.value,
            "degree": d.degree(),
            "certificate": (
                divisor_to_json(g, result.certificate)
                if result.certificate is not None
                else None
            ),
        }

    ui_dir = Path(static_dir) if static_dir else Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if ui_dir.is_dir():
        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
