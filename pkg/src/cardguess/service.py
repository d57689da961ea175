"""HTTP/JSON facade over decks and game sessions, plus static UI serving.

Sessions live in memory behind an LRU-evicting store; every numeric value
on the wire is an exact integer.  API routes are registered before the
static mount, so the UI bundle can never shadow /api paths.
"""

from __future__ import annotations

import threading
import time
from collections import OrderedDict

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import game
from .encoding import cards_required, max_representable
from .game import (
    AnswerEvent,
    GameSession,
    LimitTooLargeError,
    OutOfOrderError,
    SessionClosedError,
)

DEFAULT_CAPACITY = 10_000
DEFAULT_MAX_LIMIT = 10_000


class SessionStore:
    """Thread-safe id -> session map with least-recently-used eviction.

    Closed sessions are retained until eviction so their outcomes stay
    queryable; any get refreshes recency.
    """

    def __init__(self, capacity: int = DEFAULT_CAPACITY):
        if capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {capacity}")
        self.capacity = capacity
        self._lock = threading.Lock()
        self._entries: OrderedDict[str, tuple[GameSession, float]] = OrderedDict()

    def add(self, session: GameSession) -> None:
        with self._lock:
            self._entries[session.id] = (session, time.time())
            self._entries.move_to_end(session.id)
            while len(self._entries) > self.capacity:
                self._entries.popitem(last=False)

    def get(self, session_id: str) -> GameSession | None:
        with self._lock:
            entry = self._entries.get(session_id)
            if entry is None:
                return None
            self._entries.move_to_end(session_id)
            return entry[0]

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)


class NewSessionBody(BaseModel):
    base: int
    limit: int


class AnswerBody(BaseModel):
    index: int
    answer: bool


def _error(status: int, kind: str, detail: str) -> JSONResponse:
    return JSONResponse({"error": kind, "detail": detail}, status_code=status)


def create_app(
    capacity: int = DEFAULT_CAPACITY,
    static_dir: str | None = None,
    card_ceiling: int = game.DEFAULT_CARD_CEILING,
    max_limit: int = DEFAULT_MAX_LIMIT,
) -> FastAPI:
    """Build the service; static_dir, when given, is served for all non-API paths."""
    app = FastAPI(title="cardguess", version="0.1.0")
    store = SessionStore(capacity)
    app.state.store = store

    @app.exception_handler(RequestValidationError)
    async def _invalid_request(request, exc):  # noqa: ANN001 - starlette signature
        return _error(400, "InvalidParameters", str(exc.errors()))

    @app.post("/api/sessions", status_code=201)
    def create_session(body: NewSessionBody):
        if body.base < 2:
            return _error(400, "InvalidParameters", f"base must be >= 2, got {body.base}")
        if body.limit < 1:
            return _error(400, "InvalidParameters", f"limit must be >= 1, got {body.limit}")
        if body.limit > max_limit:
            return _error(
                422, "LimitTooLarge", f"limit {body.limit} above the server maximum {max_limit}"
            )
        try:
            session = game.new_session(body.base, body.limit, card_ceiling=card_ceiling)
        except LimitTooLargeError as exc:
            return _error(422, "LimitTooLarge", str(exc))
        store.add(session)
        deck = session.deck
        return {
            "id": session.id,
            "base": deck.base,
            "limit": deck.limit,
            "state": session.state,
            "pending": session.pending,
            "deck": [
                {
                    "power": card.power,
                    "coefficient": card.coefficient,
                    "members": list(card.members),
                }
                for card in deck.cards
            ],
        }

    @app.post("/api/sessions/{session_id}/answers")
    def post_answer(session_id: str, body: AnswerBody):
        session = store.get(session_id)
        if session is None:
            return _error(404, "UnknownSession", f"no session {session_id}")
        try:
            game.submit_answer(session, AnswerEvent(session_id, body.index, body.answer))
        except OutOfOrderError as exc:
            return _error(409, "OutOfOrder", str(exc))
        except SessionClosedError as exc:
            return _error(409, "SessionClosed", str(exc))
        return game.session_view(session)

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        if session is None:
            return _error(404, "UnknownSession", f"no session {session_id}")
        return game.session_view(session)

    @app.get("/api/formulas")
    def formulas(base: int | None = None, n: int | None = None, cards: int | None = None):
        if base is None:
            return _error(400, "InvalidParameters", "base is required")
        if (n is None) == (cards is None):
            return _error(400, "InvalidParameters", "provide exactly one of n or cards")
        try:
            if n is not None:
                return {"base": base, "n": n, "cards_required": cards_required(base, n)}
            return {
                "base": base,
                "cards": cards,
                "max_representable": max_representable(base, cards),
            }
        except ValueError as exc:
            return _error(400, "InvalidParameters", str(exc))

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
