"""Arithmetic core of the base-b number-guessing card game.

A deck for base ``b`` and limit ``L`` holds one card per (power, coefficient)
pair: the card for ``(p, c)`` lists every n in [1, L] whose base-b digit at
position ``p`` equals ``c``.  Pointing out the cards a secret number appears
on spells out its digits, so the secret is recovered by summing
``coefficient * base**power`` over the yes-cards.

All types are immutable after construction and all operations are pure, so
everything here is safe for unrestricted concurrent use.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass


class DecodeError(ValueError):
    """An answer sheet that does not identify a number in [1, limit]."""

    kind = "DecodeError"


class ConflictingAnswersError(DecodeError):
    """Two or more yes answers share a power; a number has one digit per position."""

    kind = "ConflictingAnswers"


class EmptySelectionError(DecodeError):
    """Every answer is no; 0 is never in the guessable range."""

    kind = "EmptySelection"


class OutOfRangeError(DecodeError):
    """The yes-cards sum to a number above the deck's limit."""

    kind = "OutOfRange"


def _check_base(base: int) -> int:
    base = operator.index(base)
    if base < 2:
        raise ValueError(f"base must be an integer >= 2, got {base}")
    return base


def ilog(base: int, n: int) -> int:
    """Largest p with base**p <= n, by exact integer arithmetic.

    Powers are grown by repeated multiplication instead of calling a
    floating-point log: floor(log(n, base)) can come out one too low right
    at exact powers (log(243, 3) is a classic offender), and those
    boundaries are exactly where the card-count formula changes value.
    """
    base = _check_base(base)
    n = operator.index(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p = 0
    power = base
    while power <= n:
        power *= base
        p += 1
    return p


@dataclass(frozen=True)
class Digits:
    """Base-b expansion, least significant digit first; 0 is the empty tuple."""

    base: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        coeffs = tuple(operator.index(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        for c in coeffs:
            if not 0 <= c < self.base:
                raise ValueError(f"digit {c} out of range for base {self.base}")
        if coeffs and coeffs[-1] == 0:
            raise ValueError("top coefficient must be nonzero (no leading zeros)")

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def digit_at(self, power: int) -> int:
        """Coefficient of base**power; 0 beyond the top digit."""
        if power < 0:
            raise ValueError(f"power must be >= 0, got {power}")
        if power < len(self.coefficients):
            return self.coefficients[power]
        return 0


def to_digits(base: int, n: int) -> Digits:
    """Expand n in the given base (canonical form, no leading zeros)."""
    base = _check_base(base)
    n = operator.index(n)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    coeffs = []
    while n:
        n, c = divmod(n, base)
        coeffs.append(c)
    return Digits(base, tuple(coeffs))


def from_digits(digits: Digits) -> int:
    """Exact inverse of to_digits: the sum of coefficients[i] * base**i."""
    n = 0
    for c in reversed(digits.coefficients):
        n = n * digits.base + c
    return n


def card_contains(base: int, power: int, coefficient: int, n: int) -> bool:
    """True iff the base-b digit of n at position `power` equals `coefficient`.

    Coefficient 0 is rejected: a zero digit is encoded by absence from
    every card of that power, so no card exists for it.
    """
    base = _check_base(base)
    power = operator.index(power)
    coefficient = operator.index(coefficient)
    n = operator.index(n)
    if power < 0:
        raise ValueError(f"power must be >= 0, got {power}")
    if not 1 <= coefficient <= base - 1:
        raise ValueError(
            f"coefficient must be in [1, {base - 1}] for base {base}, got {coefficient}"
        )
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (n // base**power) % base == coefficient


@dataclass(frozen=True)
class Card:
    """One yes/no question: is the digit at `power` equal to `coefficient`?"""

    base: int
    power: int
    coefficient: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        if self.power < 0:
            raise ValueError(f"power must be >= 0, got {self.power}")
        if not 1 <= self.coefficient <= self.base - 1:
            raise ValueError(
                f"coefficient must be in [1, {self.base - 1}], got {self.coefficient}"
            )


@dataclass(frozen=True)
class Deck:
    """Every card needed to guess any number in [1, limit].

    Cards are in canonical order: power descending, coefficient ascending.
    Answer sheets are positional, so this order is part of the public
    contract.
    """

    base: int
    limit: int
    cards: tuple[Card, ...]


def _card_members(base: int, power: int, coefficient: int, limit: int) -> tuple[int, ...]:
    # n has digit c at position p  <=>  n mod base**(p+1) lies in [c*b**p, (c+1)*b**p)
    block = base**power
    period = block * base
    first = coefficient * block
    if block == 1:
        return tuple(range(first, limit + 1, period))
    members: list[int] = []
    for start in range(first, limit + 1, period):
        members.extend(range(start, min(start + block, limit + 1)))
    return tuple(members)


def build_deck(base: int, limit: int) -> Deck:
    """Construct the deck for [1, limit] with fully materialized member sets."""
    base = _check_base(base)
    limit = operator.index(limit)
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    top = ilog(base, limit)
    cards = tuple(
        Card(base, power, coefficient, _card_members(base, power, coefficient, limit))
        for power in range(top, -1, -1)
        for coefficient in range(1, base)
    )
    return Deck(base, limit, cards)


@dataclass(frozen=True)
class AnswerSheet:
    """One boolean per card of a deck, positionally aligned with deck.cards."""

    deck: Deck
    answers: tuple[bool, ...]

    def __post_init__(self) -> None:
        answers = tuple(bool(a) for a in self.answers)
        object.__setattr__(self, "answers", answers)
        if len(answers) != len(self.deck.cards):
            raise ValueError(
                f"expected {len(self.deck.cards)} answers, got {len(answers)}"
            )


def decode(sheet: AnswerSheet) -> int:
    """Recover the secret as the sum of coefficient * base**power over yes-cards.

    Raises:
        ConflictingAnswersError: two or more yes answers share the same power.
        EmptySelectionError: all answers are no (would decode to 0).
        OutOfRangeError: the sum exceeds the deck's limit.
    """
    deck = sheet.deck
    total = 0
    answered_powers: set[int] = set()
    for card, yes in zip(deck.cards, sheet.answers):
        if not yes:
            continue
        if card.power in answered_powers:
            raise ConflictingAnswersError(
                f"two yes answers for power {card.power}; a number has one digit per position"
            )
        answered_powers.add(card.power)
        total += card.coefficient * deck.base**card.power
    if not answered_powers:
        raise EmptySelectionError("no cards selected; the guessable range starts at 1")
    if total > deck.limit:
        raise OutOfRangeError(f"answers decode to {total}, above the limit {deck.limit}")
    return total


def truthful_answers(deck: Deck, secret: int) -> tuple[bool, ...]:
    """The answers an honest participant gives for `secret`: yes exactly on the cards containing it."""
    secret = operator.index(secret)
    if not 1 <= secret <= deck.limit:
        raise ValueError(f"secret must be in [1, {deck.limit}], got {secret}")
    digits = to_digits(deck.base, secret)
    return tuple(card.coefficient == digits.digit_at(card.power) for card in deck.cards)


def cards_required(base: int, n: int) -> int:
    """Cards needed to cover [1, n]: (base - 1) * (ilog(base, n) + 1)."""
    return (base - 1) * (ilog(base, n) + 1)


def max_representable(base: int, n_cards: int) -> int:
    """Largest number guessable with n_cards cards: base**(n_cards // (base-1)) - 1.

    A result of 0 means the guessable range is empty (fewer cards than one
    full coefficient block).
    """
    base = _check_base(base)
    n_cards = operator.index(n_cards)
    if n_cards < 0:
        raise ValueError(f"n_cards must be >= 0, got {n_cards}")
    return base ** (n_cards // (base - 1)) - 1
