"""Game sessions and the JSON HTTP play API.

A session runs one splitter game between a human and the engine. Each round
the connector picks a vertex, the arena shrinks to its closed radius-r ball,
and the splitter deletes one vertex; the splitter wins when the arena is
empty. The engine answers with optimal moves (argmin splitter replies /
argmax connector moves, smallest id on ties), and a what-if endpoint reports
the rank consequence of a contemplated splitter reply before it is played.

Splitter legality is permissive: any arena vertex may be deleted, including
vertices outside the current ball, whose deletion leaves the ball unchanged.
Such moves are annotated as dominated so clients can gray them out.

Endpoints (all JSON):

    POST   /api/games             create session      -> 201
    GET    /api/games/{id}        fetch state         -> 200
    POST   /api/games/{id}/move   play a vertex       -> 200
    GET    /api/games/{id}/whatif?vertex=v            -> 200
    DELETE /api/games/{id}        drop session        -> 204

Errors: 400 illegal move or bad request, 404 unknown session, 409 wrong
phase, analysis disabled, or a second in-flight move.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass

from starlette.applications import Starlette
from starlette.requests import Request
from starlette.responses import JSONResponse, Response
from starlette.routing import Route

from .engine import EngineConfig, RankEngine
from .graphs import Arena, Graph, GraphError, bits, graph_from_obj

PHASE_CONNECTOR = "awaiting_connector"
PHASE_SPLITTER = "awaiting_splitter"
PHASE_FINISHED = "finished"

ROLES = ("connector", "splitter")


class PlayError(Exception):
    """Game-rule violation mapped to an HTTP status by the API layer."""

    def __init__(self, status: int, code: str):
        super().__init__(code)
        self.status = status
        self.code = code


@dataclass(frozen=True)
class GameConfig:
    """One game's fixed parameters."""

    graph: Graph
    radius: int
    human_role: str = "connector"
    analysis_enabled: bool = True

    def __post_init__(self) -> None:
        if self.graph.n == 0:
            raise ValueError("the game needs a nonempty graph")
        if self.radius < 1:
            raise ValueError("radius must be >= 1")
        if self.human_role not in ROLES:
            raise ValueError(f"human_role must be one of {ROLES}")


class Game:
    """State machine for one playthrough against the engine.

    The engine's opponent moves are played eagerly: when the human is the
    splitter, the engine opens with its connector move at creation and
    answers each completed round with the next one.
    """

    def __init__(
        self,
        config: GameConfig,
        *,
        engine: RankEngine | None = None,
        engine_config: EngineConfig | None = None,
        analysis_limit: int = 24,
    ):
        self.config = config
        if engine is not None and engine.graph != config.graph:
            raise ValueError("engine belongs to a different graph")
        self.engine = engine or RankEngine(
            config.graph, engine_config or EngineConfig(radius=config.radius)
        )
        if self.engine.config.radius != config.radius:
            raise ValueError("engine radius differs from the game radius")
        self.analysis_limit = analysis_limit
        self.round = 1
        self.arena = config.graph.full_arena()
        self.phase = PHASE_CONNECTOR
        self.pending_connector: int | None = None
        self.ball: int | None = None
        self.history: list[tuple[int, int]] = []
        self.winner_round: int | None = None
        self.initial_rank = self.engine.rank(self.arena)
        if config.human_role == "splitter":
            self.engine_move()

    # -- state machine -------------------------------------------------------

    @property
    def finished(self) -> bool:
        return self.phase == PHASE_FINISHED

    def legal_moves(self) -> dict[int, bool]:
        """Legal vertices mapped to their dominated flag.

        In the connector phase every arena vertex is legal and none is
        dominated; in the splitter phase every arena vertex is legal and
        those outside the current ball are dominated (deleting them leaves
        the ball unchanged).
        """
        if self.finished:
            raise PlayError(409, "finished")
        if self.phase == PHASE_CONNECTOR:
            return {v: False for v in self.arena.vertices()}
        assert self.ball is not None
        return {v: not self.ball >> v & 1 for v in self.arena.vertices()}

    def apply_move(self, v: int) -> None:
        """Apply one human or engine move in the current phase."""
        if self.finished:
            raise PlayError(409, "finished")
        if v not in self.arena:
            raise PlayError(400, "illegal_move")
        if self.phase == PHASE_CONNECTOR:
            self.pending_connector = v
            self.ball = self.arena.ball(v, self.config.radius)
            self.phase = PHASE_SPLITTER
            return
        assert self.ball is not None and self.pending_connector is not None
        next_members = self.ball & ~(1 << v)
        self.history.append((self.pending_connector, v))
        self.arena = Arena(self.config.graph, next_members)
        self.pending_connector = None
        self.ball = None
        if next_members == 0:
            self.phase = PHASE_FINISHED
            self.winner_round = len(self.history)
            self.round = self.winner_round
        else:
            self.phase = PHASE_CONNECTOR
            self.round = len(self.history) + 1

    def best_move(self) -> int:
        """Optimal move for whoever is to act (smallest id on ties)."""
        if self.finished:
            raise PlayError(409, "finished")
        if self.phase == PHASE_CONNECTOR:
            analysis = self.engine.analyze(self.arena)
            return min(analysis.optimal_connectors)
        assert self.pending_connector is not None
        _, argmin = self.engine.connector_value(self.arena, self.pending_connector)
        return min(argmin)

    def engine_move(self) -> int:
        """Play the engine's optimal move; it must be the engine's turn."""
        if self.finished:
            raise PlayError(409, "finished")
        engine_phase = PHASE_SPLITTER if self.config.human_role == "connector" else PHASE_CONNECTOR
        if self.phase != engine_phase:
            raise PlayError(409, "not_engine_turn")
        move = self.best_move()
        self.apply_move(move)
        return move

    def play_human(self, v: int) -> int | None:
        """Apply the human's move, then the engine's answer if any.

        Returns the engine's reply vertex, or None when the game finished
        before the engine could move.
        """
        human_phase = PHASE_CONNECTOR if self.config.human_role == "connector" else PHASE_SPLITTER
        if not self.finished and self.phase != human_phase:
            raise PlayError(409, "wrong_phase")
        self.apply_move(v)
        if self.finished:
            return None
        return self.engine_move()

    def what_if(self, v: int) -> tuple[int, bool]:
        """Rank after deleting ``v`` from the current ball, and whether that
        is strictly below the ball's own rank (a progressing move)."""
        if self.phase != PHASE_SPLITTER:
            raise PlayError(409, "wrong_phase")
        if not self.config.analysis_enabled or len(self.arena) > self.analysis_limit:
            raise PlayError(409, "analysis_disabled")
        if v not in self.arena:
            raise PlayError(400, "illegal_move")
        assert self.ball is not None
        ball_rank = self.engine.rank_of_mask(self.ball)
        resulting = self.engine.rank_of_mask(self.ball & ~(1 << v))
        return resulting, resulting < ball_rank

    def state_dict(self) -> dict:
        """The wire STATE object (stable key order)."""
        return {
            "round": self.round,
            "arena": self.arena.vertices(),
            "phase": self.phase,
            "pending_connector": self.pending_connector,
            "ball": list(bits(self.ball)) if self.ball is not None else None,
            "history": [{"c": c, "s": s} for c, s in self.history],
            "finished": self.finished,
            "winner_round": self.winner_round,
            "initial_rank": self.initial_rank,
        }


# -- HTTP service -------------------------------------------------------------


class _Session:
    __slots__ = ("game", "lock", "last_access")

    def __init__(self, game: Game, now: float):
        self.game = game
        self.lock = threading.Lock()
        self.last_access = now


class PlayService:
    """Session registry plus request handlers.

    Sessions are isolated; moves within one session are strictly serial (a
    concurrent second move gets 409), and idle sessions expire lazily.
    """

    def __init__(
        self,
        *,
        idle_timeout: float = 1800.0,
        vertex_limit: int = 64,
        analysis_limit: int = 24,
        id_factory=None,
        clock=time.monotonic,
    ):
        self.idle_timeout = idle_timeout
        self.vertex_limit = vertex_limit
        self.analysis_limit = analysis_limit
        self.id_factory = id_factory or (lambda: uuid.uuid4().hex[:12])
        self.clock = clock
        self._sessions: dict[str, _Session] = {}
        self._registry_lock = threading.Lock()

    # -- session management ---------------------------------------------------

    def _purge_expired(self) -> None:
        now = self.clock()
        with self._registry_lock:
            dead = [
                sid
                for sid, s in self._sessions.items()
                if now - s.last_access > self.idle_timeout
            ]
            for sid in dead:
                del self._sessions[sid]

    def _get(self, sid: str) -> _Session:
        self._purge_expired()
        with self._registry_lock:
            session = self._sessions.get(sid)
        if session is None:
            raise PlayError(404, "unknown_game")
        session.last_access = self.clock()
        return session

    def create(self, payload: dict) -> tuple[str, Game]:
        self._purge_expired()
        if not isinstance(payload, dict):
            raise PlayError(400, "bad_request")
        try:
            graph = graph_from_obj(payload.get("graph"))
        except GraphError:
            raise PlayError(400, "bad_graph") from None
        radius = payload.get("radius")
        role = payload.get("human_role", "connector")
        analysis = payload.get("analysis", True)
        if (
            not isinstance(radius, int)
            or isinstance(radius, bool)
            or radius < 1
            or role not in ROLES
            or not isinstance(analysis, bool)
        ):
            raise PlayError(400, "bad_request")
        if graph.n == 0:
            raise PlayError(400, "empty_graph")
        if graph.n > self.vertex_limit:
            raise PlayError(400, "graph_too_large")
        config = GameConfig(graph, radius, role, analysis)
        game = Game(
            config,
            engine_config=EngineConfig(radius=radius, vertex_limit=self.vertex_limit),
            analysis_limit=self.analysis_limit,
        )
        sid = self.id_factory()
        with self._registry_lock:
            self._sessions[sid] = _Session(game, self.clock())
        return sid, game

    def delete(self, sid: str) -> None:
        self._purge_expired()
        with self._registry_lock:
            if sid not in self._sessions:
                raise PlayError(404, "unknown_game")
            del self._sessions[sid]

    # -- handlers --------------------------------------------------------------

    async def handle_create(self, request: Request) -> Response:
        try:
            payload = await request.json()
        except Exception:
            return _error(400, "bad_request")
        try:
            sid, game = self.create(payload)
        except PlayError as exc:
            return _error(exc.status, exc.code)
        return JSONResponse({"game_id": sid, "state": game.state_dict()}, status_code=201)

    async def handle_get(self, request: Request) -> Response:
        try:
            session = self._get(request.path_params["game_id"])
        except PlayError as exc:
            return _error(exc.status, exc.code)
        with session.lock:
            return JSONResponse({"state": session.game.state_dict()})

    async def handle_move(self, request: Request) -> Response:
        try:
            session = self._get(request.path_params["game_id"])
        except PlayError as exc:
            return _error(exc.status, exc.code)
        try:
            payload = await request.json()
        except Exception:
            return _error(400, "bad_request")
        vertex = payload.get("vertex") if isinstance(payload, dict) else None
        if not isinstance(vertex, int) or isinstance(vertex, bool):
            return _error(400, "bad_request")
        if not session.lock.acquire(blocking=False):
            return _error(409, "move_in_flight")
        try:
            reply = session.game.play_human(vertex)
            state = session.game.state_dict()
        except PlayError as exc:
            return _error(exc.status, exc.code)
        finally:
            session.lock.release()
        return JSONResponse({"state": state, "engine_reply": reply})

    async def handle_whatif(self, request: Request) -> Response:
        try:
            session = self._get(request.path_params["game_id"])
        except PlayError as exc:
            return _error(exc.status, exc.code)
        raw = request.query_params.get("vertex")
        try:
            vertex = int(raw) if raw is not None else None
        except ValueError:
            vertex = None
        if vertex is None:
            return _error(400, "bad_request")
        with session.lock:
            try:
                rank, progressing = session.game.what_if(vertex)
            except PlayError as exc:
                return _error(exc.status, exc.code)
        return JSONResponse({"resulting_rank": rank, "progressing": progressing})

    async def handle_delete(self, request: Request) -> Response:
        try:
            self.delete(request.path_params["game_id"])
        except PlayError as exc:
            return _error(exc.status, exc.code)
        return Response(status_code=204)


def _error(status: int, code: str) -> JSONResponse:
    return JSONResponse({"error": code}, status_code=status)


def create_app(service: PlayService | None = None, **service_kwargs) -> Starlette:
    """Build the ASGI app; pass a preconfigured service or keyword knobs."""
    svc = service or PlayService(**service_kwargs)
    app = Starlette(
        routes=[
            Route("/api/games", svc.handle_create, methods=["POST"]),
            Route("/api/games/{game_id}", svc.handle_get, methods=["GET"]),
            Route("/api/games/{game_id}", svc.handle_delete, methods=["DELETE"]),
            Route("/api/games/{game_id}/move", svc.handle_move, methods=["POST"]),
            Route("/api/games/{game_id}/whatif", svc.handle_whatif, methods=["GET"]),
        ]
    )
    app.state.service = svc
    return app


def run(port: int = 8000, host: str = "127.0.0.1", **service_kwargs) -> None:
    """Serve the play API with uvicorn (blocking)."""
    import uvicorn

    uvicorn.run(create_app(**service_kwargs), host=host, port=port, log_level="warning")
