"""Stateless JSON-over-HTTP facade for the classifier and engine.

Every handler is a pure function of the request plus one immutable Grundy
table precomputed in create_app, before the listener starts; arbitrary
request concurrency is safe and identical requests get identical responses.

Query and body parsing is done by hand rather than through the framework's
validators so malformed input maps to 400, out-of-range coordinates to 422
and illegal moves to 409 with {valid: false, reason}.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .classify import all_winning_moves, classify, engine_move, winning_move
from .core import (
    COORD_MAX,
    Convention,
    Edge,
    Outcome,
    TriangleMove,
    TrianglePosition,
    apply_move,
    is_terminal,
)
from .errors import DomainError, IllegalMove
from .solver import SolveTable, solve_triangle

DEFAULT_GRUNDY_BOUND = 60
DEFAULT_PORT = 8173

#: Positions with totals above this get only the constructive winning move in
#: classify responses; exhaustive enumeration is quadratic in the total.
EXHAUSTIVE_MOVES_CAP = 200


class _RequestError(Exception):
    def __init__(self, status: int, body: dict):
        super().__init__(body)
        self.status = status
        self.body = body


def _bad_request(message: str) -> _RequestError:
    return _RequestError(400, {"error": message})


def _unprocessable(message: str) -> _RequestError:
    return _RequestError(422, {"error": message})


def _parse_coord(params: Mapping[str, str], name: str) -> int:
    raw = params.get(name)
    if raw is None:
        raise _bad_request(f"missing query parameter {name!r}")
    if not raw.isdigit():
        raise _bad_request(f"query parameter {name!r} must be a non-negative integer, got {raw!r}")
    value = int(raw)
    if value > COORD_MAX:
        raise _unprocessable(f"coordinate {name}={value} exceeds the maximum {COORD_MAX}")
    return value


def _parse_query_position(params: Mapping[str, str]) -> TrianglePosition:
    return TrianglePosition(*(_parse_coord(params, name) for name in ("x", "y", "z")))


def _parse_convention(raw: Optional[str]) -> Convention:
    if raw is None:
        return Convention.NORMAL
    try:
        return Convention(raw)
    except ValueError:
        raise _bad_request(f"convention must be 'normal' or 'misere', got {raw!r}") from None


def _require_int(value: object, what: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _bad_request(f"{what} must be an integer")
    if value < minimum:
        raise _bad_request(f"{what} must be at least {minimum}, got {value}")
    return value


def _parse_body_position(value: object) -> TrianglePosition:
    if not isinstance(value, Sequence) or isinstance(value, (str, bytes)) or len(value) != 3:
        raise _bad_request("position must be an array of three integers")
    coords = [_require_int(v, "position coordinate") for v in value]
    for c in coords:
        if c > COORD_MAX:
            raise _unprocessable(f"coordinate {c} exceeds the maximum {COORD_MAX}")
    return TrianglePosition(*coords)


def _parse_body_move(value: object) -> TriangleMove:
    if not isinstance(value, Mapping):
        raise _bad_request("move must be an object with edge, take and give")
    try:
        edge = Edge(value.get("edge"))
    except ValueError:
        raise _bad_request(f"move edge must be one of XY, YZ, ZX, got {value.get('edge')!r}") from None
    take = _require_int(value.get("take"), "move take", minimum=1)
    give = _require_int(value.get("give"), "move give", minimum=0)
    return TriangleMove(edge, take, give)


def _position_json(p: TrianglePosition) -> list[int]:
    return [p.x, p.y, p.z]


def _move_json(m: TriangleMove) -> dict:
    return {"edge": m.edge.value, "take": m.take, "give": m.give}


def create_app(
    grundy_bound: int = DEFAULT_GRUNDY_BOUND,
    static_dir: Union[str, Path, None] = None,
    allow_origins: Sequence[str] = (),
    backend: Optional[str] = None,
) -> FastAPI:
    """Build the application, precomputing the Grundy cache up front."""
    grundy_table: SolveTable = solve_triangle(grundy_bound, Convention.NORMAL, grundy=True, backend=backend)

    app = FastAPI(title="trinim", docs_url=None, redoc_url=None, openapi_url=None)

    if allow_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(allow_origins),
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )

    @app.exception_handler(_RequestError)
    async def _request_error(_request: Request, exc: _RequestError) -> JSONResponse:
        return JSONResponse(exc.body, status_code=exc.status)

    @app.get("/api/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.get("/api/classify")
    async def classify_endpoint(request: Request) -> JSONResponse:
        params = request.query_params
        position = _parse_query_position(params)
        convention = _parse_convention(params.get("convention"))
        result = classify(position, convention)

        if position.x + position.y + position.z <= EXHAUSTIVE_MOVES_CAP:
            moves = all_winning_moves(position, convention)
            complete = True
        else:
            best = winning_move(position, convention)
            moves = [best] if best is not None else []
            complete = result.outcome is Outcome.P
        grundy = None
        if position.x + position.y + position.z <= grundy_table.bound:
            grundy = grundy_table.grundy(position)

        return JSONResponse(
            {
                "position": _position_json(position),
                "convention": convention.value,
                "outcome": result.outcome.value,
                "matched_set": result.matched_set,
                "witness_rotation": result.witness_rotation,
                "winning_moves": [
                    _move_json(m) | {"result": _position_json(apply_move(position, m))}
                    for m in moves
                ],
                "winning_moves_complete": complete,
                "grundy": grundy,
            }
        )

    @app.post("/api/move")
    async def move_endpoint(request: Request) -> JSONResponse:
        try:
            body = await request.json()
        except Exception:
            raise _bad_request("body must be valid JSON") from None
        if not isinstance(body, Mapping):
            raise _bad_request("body must be a JSON object")

        position = _parse_body_position(body.get("position"))
        move = _parse_body_move(body.get("move"))
        convention = _parse_convention(body.get("convention"))

        try:
            after_human = apply_move(position, move)
        except IllegalMove as exc:
            return JSONResponse({"valid": False, "reason": str(exc)}, status_code=409)

        from .classify import outcome as outcome_of

        next_outcome = outcome_of(after_human, convention)
        reply: Optional[TriangleMove] = None
        after_engine: Optional[TrianglePosition] = None
        if is_terminal(after_human):
            terminal_after = "human"
            winner = "human" if convention is Convention.NORMAL else "engine"
        else:
            reply = engine_move(after_human, convention)
            after_engine = apply_move(after_human, reply)
            if is_terminal(after_engine):
                terminal_after = "engine"
                winner = "engine" if convention is Convention.NORMAL else "human"
            else:
                terminal_after = "none"
                winner = None

        return JSONResponse(
            {
                "valid": True,
                "next": _position_json(after_human),
                "next_outcome": next_outcome.value,
                "engine_move": _move_json(reply) if reply is not None else None,
                "engine_next": _position_json(after_engine) if after_engine is not None else None,
                "terminal_after": terminal_after,
                "winner": winner,
            }
        )

    @app.get("/api/grundy")
    async def grundy_endpoint(request: Request) -> JSONResponse:
        position = _parse_query_position(request.query_params)
        total = position.x + position.y + position.z
        if total > grundy_table.bound:
            raise _unprocessable(
                f"total {total} exceeds the grundy cache bound {grundy_table.bound}"
            )
        return JSONResponse({"grundy": grundy_table.grundy(position)})

    static_path = Path(static_dir) if static_dir is not None else None
    if static_path is not None and static_path.is_dir():
        app.mount("/", StaticFiles(directory=static_path, html=True), name="ui")
    else:

        @app.get("/")
        async def index() -> dict:
            return {"service": "trinim", "health": "/api/health"}

    return app
