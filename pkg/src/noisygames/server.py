"""HTTP service: solving, sweeps and live play sessions under /api/v1.

All bodies and responses are JSON.  Errors carry a machine-readable code:
invalid_spec | illegal_move | out_of_turn | session_finished |
session_not_found | session_busy.  Move indices are follower-list indices;
responses also carry human-readable move labels.
"""

from __future__ import annotations

import os

from fastapi import Body, FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .gamespec import ResolvedGame, SpecError, resolve_game_spec
from .session import (
    ENGINE,
    HUMAN,
    PlaySession,
    SessionError,
    SessionStore,
    create_session,
)
from .solver import solve
from .tables import p_grid, sweep_chomp, sweep_nim1

_ERROR_STATUS = {
    "invalid_spec": 400,
    "illegal_move": 400,
    "out_of_turn": 409,
    "session_finished": 409,
    "session_busy": 409,
    "session_not_found": 404,
}


def _error(code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=_ERROR_STATUS.get(code, 400),
        content={"error": {"code": code, "message": message}},
    )


def _session_state(session: PlaySession) -> dict:
    graph = session.game.graph
    v = session.current
    return {
        "id": session.id,
        "status": session.status,
        "winner": session.winner,
        "to_move": session.to_move if session.live else None,
        "seed": session.seed,
        "spec": session.game.spec,
        "current": {
            "index": v,
            "label": graph.labels[v],
            "board": session.game.board(v),
        },
        "moves": [
            {"index": w, "label": session.game.move_labels[v][w]}
            for w in range(len(graph.followers[v]))
        ],
        "history": [half.as_dict() for half in session.history],
    }


def _solve_payload(game: ResolvedGame) -> dict:
    solved = solve(game.graph, game.model)
    positions = []
    for v in range(game.graph.position_count):
        positions.append(
            {
                "index": v,
                "label": game.graph.labels[v],
                "board": game.board(v),
                "value": solved.values[v],
                "class": solved.classes[v],
                "move_values": list(solved.move_values[v]),
                "optimal_moves": list(solved.optimal_moves[v]),
                "moves": list(game.move_labels[v]),
            }
        )
    return {
        "family": game.family,
        "spec": game.spec,
        "start": game.graph.start,
        "positions": positions,
    }


def create_app(static_dir: str | None = None, store: SessionStore | None = None) -> FastAPI:
    app = FastAPI(title="noisygames", docs_url=None, redoc_url=None)
    sessions = store if store is not None else SessionStore()

    @app.exception_handler(SessionError)
    async def _session_error_handler(request: Request, exc: SessionError):
        return _error(exc.code, str(exc))

    @app.exception_handler(SpecError)
    async def _spec_error_handler(request: Request, exc: SpecError):
        return _error("invalid_spec", str(exc))

    @app.post("/api/v1/solve")
    def solve_game(spec: dict = Body(...)):
        game = resolve_game_spec(spec)
        return _solve_payload(game)

    @app.get("/api/v1/sweep")
    def sweep(
        game: str,
        k: int = 0,
        rows: int = 0,
        cols: int = 0,
        variant: str = "n8",
        points: int = 101,
    ):
        if points < 2:
            raise SpecError(f"points must be >= 2, got {points}")
        if game == "nim1":
            if k < 1:
                raise SpecError("nim1 sweep needs k >= 1")
            table = sweep_nim1(k, points)
        elif game == "chomp":
            if rows < 1 or cols < 1:
                raise SpecError("chomp sweep needs rows >= 1 and cols >= 1")
            table = sweep_chomp(rows, cols, variant, points)
        else:
            raise SpecError(f"cannot sweep game {game!r} (no p parameter)")
        return [
            {
                "p": row.p,
                "value": row.value,
                "optimal_moves": list(row.optimal_moves),
            }
            for row in table
        ]

    @app.post("/api/v1/sessions")
    def new_session(payload: dict = Body(...)):
        if "spec" not in payload:
            raise SpecError("session payload needs a 'spec' object")
        game = resolve_game_spec(payload["spec"])
        seed = payload.get("seed", 0)
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise SpecError(f"seed must be an integer, got {seed!r}")
        human_first = payload.get("human_first", True)
        if not isinstance(human_first, bool):
            raise SpecError("human_first must be a boolean")
        session = create_session(game, seed=seed, human_plays_first=human_first)
        sessions.add(session)
        return _session_state(session)

    @app.get("/api/v1/sessions/{session_id}")
    def get_session(session_id: str):
        return _session_state(sessions.get(session_id))

    @app.post("/api/v1/sessions/{session_id}/moves")
    def post_move(session_id: str, payload: dict = Body(...)):
        if "sent" not in payload:
            raise SpecError("move payload needs a 'sent' move index")
        session, human_half, engine_half = sessions.submit_move(session_id, payload["sent"])
        body = {
            "human": {"sent": human_half.sent, "landed": human_half.landed},
            "state": _session_state(session),
        }
        if engine_half is not None:
            body["engine"] = {"sent": engine_half.sent, "landed": engine_half.landed}
        return body

    @app.get("/api/v1/sessions/{session_id}/hint")
    def hint(session_id: str):
        session = sessions.get(session_id)
        move_values, optimal_moves = session.hint()
        return {
            "move_values": list(move_values),
            "optimal_moves": list(optimal_moves),
            "moves": list(session.game.move_labels[session.current]),
        }

    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def default_static_dir() -> str | None:
    """Locate built web assets: $NOISYGAMES_STATIC, ./frontend, or none."""
    env = os.environ.get("NOISYGAMES_STATIC")
    if env and os.path.isdir(env):
        return env
    for base in (os.getcwd(), os.path.dirname(os.path.dirname(os.path.dirname(__file__)))):
        candidate = os.path.join(base, "frontend")
        if os.path.isdir(os.path.join(candidate, "dist")):
            return candidate
    return None
