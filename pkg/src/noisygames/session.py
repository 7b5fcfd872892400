"""Interactive play sessions: a human against the solved engine, move by
move through the sampled channel.

A session is in-memory state keyed by an unguessable token.  The engine
replies synchronously: whenever it is the engine's turn (including right
after creation, for engine-first games) it immediately transmits its
canonical optimal move through the same channel.  Sessions evict after 30
idle minutes; determinism comes from the session seed, so an evicted game
can always be replayed.
"""

from __future__ import annotations

import random
import secrets
import threading
import time
from dataclasses import dataclass, field

from .gamespec import ResolvedGame
from .montecarlo import sample_received_move
from .solver import SolvedGame, solve

HUMAN = "human"
ENGINE = "engine"

DEFAULT_IDLE_SECONDS = 30 * 60


class SessionError(Exception):
    """Session-layer failure with a machine-readable code."""

    code = "session_error"

    def __init__(self, message: str):
        super().__init__(message)


class IllegalMoveError(SessionError):
    code = "illegal_move"


class OutOfTurnError(SessionError):
    code = "out_of_turn"


class SessionFinishedError(SessionError):
    code = "session_finished"


class SessionNotFoundError(SessionError):
    code = "session_not_found"


class SessionBusyError(SessionError):
    code = "session_busy"


@dataclass
class HalfMove:
    player: str
    sent: int
    landed: int
    position: int  # position reached by the landed move

    def as_dict(self) -> dict:
        return {
            "player": self.player,
            "sent": self.sent,
            "landed": self.landed,
            "position": self.position,
        }


@dataclass
class PlaySession:
    id: str
    game: ResolvedGame
    solved: SolvedGame
    seed: int
    current: int
    to_move: str
    history: list[HalfMove] = field(default_factory=list)
    status: str = "live"
    winner: str | None = None

    def __post_init__(self):
        self._rng = random.Random(self.seed)
        self._check_terminal()
        self._play_engine_turns()

    # -- queries ---------------------------------------------------------

    @property
    def live(self) -> bool:
        return self.status == "live"

    def legal_move_count(self) -> int:
        return len(self.game.graph.followers[self.current])

    def hint(self) -> tuple[tuple[float, ...], tuple[int, ...]]:
        """Per-move win probabilities and the optimal set at the current
        position, straight from the cached solution."""
        if not self.live:
            raise SessionFinishedError("session is finished, no moves to hint")
        return (
            self.solved.move_values[self.current],
            self.solved.optimal_moves[self.current],
        )

    def replay_current(self) -> int:
        """Position reached by replaying recorded landed moves from the start."""
        pos = self.game.graph.start
        for entry in self.history:
            pos = self.game.graph.followers[pos][entry.landed]
        return pos

    # -- mutations -------------------------------------------------------

    def submit_move(self, sent: int) -> tuple[HalfMove, HalfMove | None]:
        """Apply the human's transmitted move, then the engine's reply.

        Raises:
            SessionFinishedError: the game is over.
            OutOfTurnError: it is not the human's turn.
            IllegalMoveError: sent is not a legal move index.
        """
        if not self.live:
            raise SessionFinishedError(f"game already finished, winner: {self.winner}")
        if self.to_move != HUMAN:
            raise OutOfTurnError("it is the engine's turn")
        if not isinstance(sent, int) or isinstance(sent, bool):
            raise IllegalMoveError(f"move index must be an integer, got {sent!r}")
        degree = self.legal_move_count()
        if not 0 <= sent < degree:
            raise IllegalMoveError(
                f"move index {sent} out of range [0, {degree}) at position {self.current}"
            )
        human_half = self._apply(HUMAN, sent)
        engine_half = self._play_engine_turns()
        return human_half, engine_half

    def _apply(self, player: str, sent: int) -> HalfMove:
        landed = sample_received_move(
            self.game.model, self.current, sent, self._rng.random()
        )
        new_pos = self.game.graph.followers[self.current][landed]
        half = HalfMove(player=player, sent=sent, landed=landed, position=new_pos)
        self.history.append(half)
        self.current = new_pos
        self.to_move = ENGINE if player == HUMAN else HUMAN
        self._check_terminal()
        return half

    def _play_engine_turns(self) -> HalfMove | None:
        last = None
        while self.live and self.to_move == ENGINE:
            sent = self.solved.optimal_moves[self.current][0]
            last = self._apply(ENGINE, sent)
        return last

    def _check_terminal(self) -> None:
        if self.game.graph.is_terminal(self.current):
            self.status = "finished"
            self.winner = ENGINE if self.to_move == HUMAN else HUMAN


def create_session(
    game: ResolvedGame,
    seed: int,
    human_plays_first: bool = True,
    solved: SolvedGame | None = None,
    session_id: str | None = None,
) -> PlaySession:
    if solved is None:
        solved = solve(game.graph, game.model)
    return PlaySession(
        id=session_id or secrets.token_urlsafe(16),
        game=game,
        solved=solved,
        seed=seed,
        current=game.graph.start,
        to_move=HUMAN if human_plays_first else ENGINE,
    )


class SessionStore:
    """Thread-safe in-memory session registry with idle eviction.

    Each session serializes its own mutations: a concurrent second
    submit_move on the same session fails fast with session_busy rather
    than queueing.
    """

    def __init__(self, idle_seconds: float = DEFAULT_IDLE_SECONDS, clock=time.monotonic):
        self._sessions: dict[str, PlaySession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._touched: dict[str, float] = {}
        self._registry_lock = threading.Lock()
        self._idle_seconds = idle_seconds
        self._clock = clock

    def add(self, session: PlaySession) -> None:
        with self._registry_lock:
            self._evict_idle()
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()
            self._touched[session.id] = self._clock()

    def get(self, session_id: str) -> PlaySession:
        with self._registry_lock:
            self._evict_idle()
            if session_id not in self._sessions:
                raise SessionNotFoundError(f"no session {session_id!r}")
            self._touched[session_id] = self._clock()
            return self._sessions[session_id]

    def submit_move(self, session_id: str, sent: int) -> tuple[PlaySession, HalfMove, HalfMove | None]:
        session = self.get(session_id)
        lock = self._locks[session_id]
        if not lock.acquire(blocking=False):
            raise SessionBusyError(f"session {session_id!r} has a move in flight")
        try:
            human_half, engine_half = session.submit_move(sent)
            return session, human_half, engine_half
        finally:
            lock.release()

    def _evict_idle(self) -> None:
        now = self._clock()
        stale = [
            sid
            for sid, touched in self._touched.items()
            if now - touched > self._idle_seconds
        ]
        for sid in stale:
            del self._sessions[sid]
            del self._locks[sid]
            del self._touched[sid]
