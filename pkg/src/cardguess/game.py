"""Session state machine for one interactive play-through.

A session deals a deck, collects one yes/no answer per card in canonical
order, and on the last answer either reveals the decoded number or fails
with the reason the answers were inconsistent.  Lies are undetectable per
card, so inconsistency only ever surfaces at the end.
"""

from __future__ import annotations

import secrets
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .encoding import (
    AnswerSheet,
    Deck,
    DecodeError,
    build_deck,
    cards_required,
    decode,
)

DEFAULT_CARD_CEILING = 64

COLLECTING = "collecting"
REVEALED = "revealed"
FAILED = "failed"


class GameError(Exception):
    kind = "GameError"


class LimitTooLargeError(GameError):
    """The deck would exceed the configured card ceiling."""

    kind = "LimitTooLarge"


class OutOfOrderError(GameError):
    """An answer arrived for a card other than the pending one."""

    kind = "OutOfOrder"


class SessionClosedError(GameError):
    """The session already revealed or failed; closed sessions are immutable."""

    kind = "SessionClosed"


@dataclass(frozen=True)
class AnswerEvent:
    """One yes/no answer for the pending card of one session."""

    session_id: str
    index: int
    answer: bool


@lru_cache(maxsize=256)
def _shared_deck(base: int, limit: int) -> Deck:
    # Decks are immutable, so concurrent sessions share one instance.
    return build_deck(base, limit)


class GameSession:
    """One play-through: answers collected in canonical card order, then a reveal.

    Transitions are serialized by a per-session lock; distinct sessions are
    fully independent.
    """

    def __init__(self, deck: Deck, session_id: str | None = None):
        self.id = session_id if session_id is not None else secrets.token_urlsafe(16)
        self.deck = deck
        self.answers: list[bool] = []
        self.state = COLLECTING
        self.outcome: int | None = None
        self.error: str | None = None
        self._lock = threading.Lock()

    @property
    def pending(self) -> int:
        """Index of the next unanswered card; equals the card count once closed."""
        return len(self.answers)


def new_session(
    base: int, limit: int, card_ceiling: int = DEFAULT_CARD_CEILING
) -> GameSession:
    """Open a collecting session over build_deck(base, limit).

    Raises LimitTooLargeError when the deck would exceed `card_ceiling`
    (guards against pathologies like base 2 with limit 2**80).
    """
    n_cards = cards_required(base, limit)
    if n_cards > card_ceiling:
        raise LimitTooLargeError(
            f"deck for base {base}, limit {limit} needs {n_cards} cards; "
            f"the ceiling is {card_ceiling}"
        )
    return GameSession(_shared_deck(base, limit))


def submit_answer(session: GameSession, event: AnswerEvent) -> GameSession:
    """Record one answer; on the final card, reveal or fail.

    Raises:
        SessionClosedError: the session is not collecting.
        OutOfOrderError: event.index is not the pending card.
    """
    if event.session_id != session.id:
        raise ValueError("event addresses a different session")
    with session._lock:
        if session.state != COLLECTING:
            raise SessionClosedError(f"session is {session.state}")
        if event.index != session.pending:
            raise OutOfOrderError(
                f"expected an answer for card {session.pending}, got {event.index}"
            )
        session.answers.append(bool(event.answer))
        if session.pending == len(session.deck.cards):
            try:
                session.outcome = decode(AnswerSheet(session.deck, tuple(session.answers)))
                session.state = REVEALED
            except DecodeError as exc:
                session.error = exc.kind
                session.state = FAILED
    return session


def session_view(session: GameSession) -> dict[str, Any]:
    """Public snapshot: deck metadata, the current card, progress, outcome.

    Nothing the participant did not provide is revealed; the decoded
    number appears only once the session is revealed, and a failed
    session carries its error kind plus the replayable answer transcript.
    """
    with session._lock:
        state = session.state
        answers = list(session.answers)
        outcome = session.outcome
        error = session.error
    deck = session.deck
    current = deck.cards[len(answers)] if state == COLLECTING else None
    view: dict[str, Any] = {
        "id": session.id,
        "base": deck.base,
        "limit": deck.limit,
        "card_count": len(deck.cards),
        "cards": [{"power": c.power, "coefficient": c.coefficient} for c in deck.cards],
        "state": state,
        "pending": len(answers),
        "answers": answers,
        "current_card": (
            {
                "power": current.power,
                "coefficient": current.coefficient,
                "members": list(current.members),
            }
            if current is not None
            else None
        ),
    }
    if state == REVEALED:
        view["outcome"] = outcome
    if state == FAILED:
        view["error"] = error
    return view
