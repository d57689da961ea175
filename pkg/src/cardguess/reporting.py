"""Card-count and range data series, emitted as CSV or JSON tables.

Three families of series: card count as the target number grows (one
series per base), card count as the base varies (one series per target),
and the widest guessable range as the card count grows (one series per
base).  Rendering plots is out of scope; the tables are meant to be fed
to any external plotting tool.
"""

from __future__ import annotations

import csv
import json
import operator
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .encoding import cards_required, max_representable


@dataclass(frozen=True)
class Series:
    """One labeled data series of (x, y) points with strictly increasing x."""

    label: str
    points: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        points = tuple((operator.index(x), operator.index(y)) for x, y in self.points)
        object.__setattr__(self, "points", points)
        if any(b <= a for (a, _), (b, _) in zip(points, points[1:])):
            raise ValueError("x values must be strictly increasing")


def cards_growth_series(
    bases: Sequence[int] = range(2, 11), n_max: int = 1024
) -> list[Series]:
    """Per base: cards needed to cover [1, n] for n in [1, n_max].

    Each series is a staircase that steps up by (base - 1) exactly when n
    reaches a power of the base.
    """
    n_max = operator.index(n_max)
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    return [
        Series(f"b={b}", tuple((n, cards_required(b, n)) for n in range(1, n_max + 1)))
        for b in bases
    ]


def cards_by_base_series(
    targets: Sequence[int] = range(8, 17), b_max: int = 16
) -> list[Series]:
    """Per target n: cards needed to cover [1, n] as the base varies over [2, b_max]."""
    b_max = operator.index(b_max)
    if b_max < 2:
        raise ValueError(f"b_max must be >= 2, got {b_max}")
    return [
        Series(f"n={n}", tuple((b, cards_required(b, n)) for b in range(2, b_max + 1)))
        for n in targets
    ]


def range_growth_series(
    bases: Sequence[int] = range(2, 11), n_cards_max: int = 30
) -> list[Series]:
    """Per base: the largest guessable number as the card count grows to n_cards_max."""
    n_cards_max = operator.index(n_cards_max)
    if n_cards_max < 1:
        raise ValueError(f"n_cards_max must be >= 1, got {n_cards_max}")
    return [
        Series(
            f"b={b}",
            tuple((n, max_representable(b, n)) for n in range(1, n_cards_max + 1)),
        )
        for b in bases
    ]


def write_series_csv(series: Iterable[Series], path: str | Path) -> None:
    """Write columns x, y, label: UTF-8, LF line endings, numbers unquoted."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["x", "y", "label"])
        for s in series:
            for x, y in s.points:
                writer.writerow([x, y, s.label])


def write_series_json(series: Iterable[Series], path: str | Path) -> None:
    """Write an array of {label, points} objects, points as [x, y] pairs."""
    payload = [
        {"label": s.label, "points": [[x, y] for x, y in s.points]} for s in series
    ]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
