"""Exhaustive and numeric checks that base 2 wins both efficiency comparisons.

Two claims are swept cell by cell with exact integer arithmetic: base 2
never needs more cards than any base b > 2 to cover [1, n] (with exactly
two ties), and for a fixed card count base 2 always covers a strictly
wider range.  The two real-valued ratios those comparisons hinge on are
checked numerically on dense grids.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from itertools import pairwise

from .encoding import max_representable


@dataclass(frozen=True)
class EqualityPair:
    """A (base, n) where base 2 ties instead of strictly beating base > 2."""

    base: int
    n: int


@dataclass(frozen=True)
class CardMinimalityReport:
    """Outcome of sweeping: cards_required(2, n) <= cards_required(b, n)."""

    n_max: int
    b_max: int
    violations: tuple[tuple[int, int], ...]
    equalities: tuple[EqualityPair, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class RangeDominanceReport:
    """Outcome of sweeping: 2**N - 1 > base**(N // (base-1)) - 1, strictly."""

    n_cards_max: int
    b_max: int
    violations: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _card_count_table(base: int, n_max: int) -> list[int]:
    """table[n] = cards_required(base, n) for n in [1, n_max].

    The count steps by (base - 1) exactly when n reaches a power of the
    base, so the whole table is filled in one pass of exact integer
    comparisons instead of n_max separate logarithms.
    """
    table = [0] * (n_max + 1)
    count = base - 1
    next_power = base
    for n in range(1, n_max + 1):
        if n == next_power:
            count += base - 1
            next_power *= base
        table[n] = count
    return table


def verify_card_minimality(n_max: int, b_max: int) -> CardMinimalityReport:
    """Sweep all b in [3, b_max], n in [1, n_max] comparing card counts to base 2.

    Each cell is classified as strict, equal, or violation; the violation
    and equality lists come out sorted by (base, n).
    """
    n_max = operator.index(n_max)
    b_max = operator.index(b_max)
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if b_max < 3:
        raise ValueError(f"b_max must be >= 3, got {b_max}")
    binary = _card_count_table(2, n_max)
    violations: list[tuple[int, int]] = []
    equalities: list[EqualityPair] = []
    for base in range(3, b_max + 1):
        count = base - 1
        next_power = base
        for n in range(1, n_max + 1):
            if n == next_power:
                count += base - 1
                next_power *= base
            lhs = binary[n]
            if lhs > count:
                violations.append((base, n))
            elif lhs == count:
                equalities.append(EqualityPair(base, n))
    return CardMinimalityReport(n_max, b_max, tuple(violations), tuple(equalities))


def verify_range_dominance(n_cards_max: int, b_max: int) -> RangeDominanceReport:
    """Sweep all b in [3, b_max], N in [1, n_cards_max] comparing guessable ranges.

    Both sides are evaluated with arbitrary-precision integers
    (2**256 overflows any fixed-width type); strict inequality must hold
    in every cell.
    """
    n_cards_max = operator.index(n_cards_max)
    b_max = operator.index(b_max)
    if n_cards_max < 1:
        raise ValueError(f"n_cards_max must be >= 1, got {n_cards_max}")
    if b_max < 3:
        raise ValueError(f"b_max must be >= 3, got {b_max}")
    violations: list[tuple[int, int]] = []
    for base in range(3, b_max + 1):
        for n_cards in range(1, n_cards_max + 1):
            if max_representable(2, n_cards) <= max_representable(base, n_cards):
                violations.append((base, n_cards))
    return RangeDominanceReport(n_cards_max, b_max, tuple(violations))


def block_cost_ratio(base: float) -> float:
    """(base - 1) / (2 * log2(base)): card-block size against twice the bits per digit.

    Strictly increasing for base > 1; it crosses 1 between 6 and 7.
    """
    if base <= 1:
        raise ValueError(f"base must be > 1, got {base}")
    return (base - 1) / (2 * math.log2(base))


def bits_per_card(base: float) -> float:
    """log2(base) / (base - 1): information one yes/no card conveys.

    Exactly 1 bit at base 2 and strictly less for every larger base,
    which is the whole reason binary decks are the smallest.
    """
    if base <= 1:
        raise ValueError(f"base must be > 1, got {base}")
    return math.log2(base) / (base - 1)


def _grid(b_lo: float, b_hi: float, steps: int) -> list[float]:
    steps = operator.index(steps)
    if not 1 < b_lo < b_hi:
        raise ValueError(f"need 1 < b_lo < b_hi, got [{b_lo}, {b_hi}]")
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    width = (b_hi - b_lo) / steps
    return [b_lo + i * width for i in range(steps)] + [b_hi]


def check_block_cost_ratio_increasing(b_lo: float, b_hi: float, steps: int) -> bool:
    """Grid check that block_cost_ratio strictly increases on [b_lo, b_hi].

    Strict float comparison, no tolerance: the ratio moves far more than
    representation error between adjacent points at any sane resolution.
    This is a numeric sanity check, not a proof.
    """
    return all(
        block_cost_ratio(a) < block_cost_ratio(b)
        for a, b in pairwise(_grid(b_lo, b_hi, steps))
    )


def check_bits_per_card_decreasing(b_lo: float, b_hi: float, steps: int) -> bool:
    """Grid check that bits_per_card strictly decreases on [b_lo, b_hi].

    Also requires bits_per_card(2) == 1 exactly and a value below 1 at
    every grid point past 2, regardless of whether 2 lies on the grid.
    """
    grid = _grid(b_lo, b_hi, steps)
    if bits_per_card(2.0) != 1.0:
        return False
    decreasing = all(bits_per_card(a) > bits_per_card(b) for a, b in pairwise(grid))
    below_one_past_two = all(bits_per_card(b) < 1.0 for b in grid if b > 2.0)
    return decreasing and below_one_past_two
