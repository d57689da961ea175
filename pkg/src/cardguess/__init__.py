"""Guess-my-number card decks in any integer base.

The classic street trick: a participant thinks of a number, points out
which cards it appears on, and the performer reads the number straight
off the answers.  This package builds the decks for any base >= 2,
decodes answer sheets, runs interactive sessions, sweeps the proofs that
base 2 is optimal, and serves the whole thing over HTTP.
"""

from .encoding import (
    AnswerSheet,
    Card,
    ConflictingAnswersError,
    Deck,
    DecodeError,
    Digits,
    EmptySelectionError,
    OutOfRangeError,
    build_deck,
    card_contains,
    cards_required,
    decode,
    from_digits,
    ilog,
    max_representable,
    to_digits,
    truthful_answers,
)
from .game import (
    AnswerEvent,
    GameError,
    GameSession,
    LimitTooLargeError,
    OutOfOrderError,
    SessionClosedError,
    new_session,
    session_view,
    submit_answer,
)
from .optimality import (
    CardMinimalityReport,
    EqualityPair,
    RangeDominanceReport,
    bits_per_card,
    block_cost_ratio,
    check_bits_per_card_decreasing,
    check_block_cost_ratio_increasing,
    verify_card_minimality,
    verify_range_dominance,
)
from .reporting import (
    Series,
    cards_by_base_series,
    cards_growth_series,
    range_growth_series,
    write_series_csv,
    write_series_json,
)

__version__ = "0.1.0"

__all__ = [
    "AnswerEvent",
    "AnswerSheet",
    "Card",
    "CardMinimalityReport",
    "ConflictingAnswersError",
    "Deck",
    "DecodeError",
    "Digits",
    "EmptySelectionError",
    "EqualityPair",
    "GameError",
    "GameSession",
    "LimitTooLargeError",
    "OutOfOrderError",
    "OutOfRangeError",
    "RangeDominanceReport",
    "Series",
    "SessionClosedError",
    "bits_per_card",
    "block_cost_ratio",
    "build_deck",
    "card_contains",
    "cards_by_base_series",
    "cards_growth_series",
    "cards_required",
    "check_bits_per_card_decreasing",
    "check_block_cost_ratio_increasing",
    "decode",
    "from_digits",
    "ilog",
    "max_representable",
    "new_session",
    "range_growth_series",
    "session_view",
    "submit_answer",
    "to_digits",
    "truthful_answers",
    "verify_card_minimality",
    "verify_range_dominance",
    "write_series_csv",
    "write_series_json",
]
