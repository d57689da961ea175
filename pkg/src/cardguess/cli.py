"""Command-line front door: deck printing, interactive play, verification sweeps,
and figure-data export.

Exit codes: 0 success, 2 argument error, 3 inconsistent interactive answers,
4 verification violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Sequence

from .encoding import Card, Deck, build_deck
from .game import AnswerEvent, new_session, submit_answer
from .optimality import verify_card_minimality, verify_range_dominance
from .reporting import (
    Series,
    cards_by_base_series,
    cards_growth_series,
    range_growth_series,
    write_series_csv,
    write_series_json,
)

OUT_DIR_ENV = "CARDGUESS_OUT_DIR"

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def card_title(card: Card, ascii_only: bool = False) -> str:
    """Render a card header like 2·3² (or 2*3^2 with ascii_only)."""
    if ascii_only:
        power = f"{card.base}^{card.power}"
        return power if card.coefficient == 1 else f"{card.coefficient}*{power}"
    power = f"{card.base}{str(card.power).translate(_SUPERSCRIPTS)}"
    return power if card.coefficient == 1 else f"{card.coefficient}·{power}"


def _term(base: int, coefficient: int, value: int, ascii_only: bool) -> str:
    # binary sums read as bare powers (32 + 8 + ...); other bases keep the
    # coefficient visible even when it is 1 (2·9 + 1·3 + 2·1)
    if base == 2:
        return str(value)
    dot = "*" if ascii_only else "·"
    return f"{coefficient}{dot}{value}"


def _render_deck_text(deck: Deck, ascii_only: bool) -> str:
    lines = [f"base {deck.base}, limit {deck.limit}: {len(deck.cards)} cards"]
    for i, card in enumerate(deck.cards, start=1):
        members = " ".join(map(str, card.members)) if card.members else "(empty)"
        lines.append(f"[{i}] {card_title(card, ascii_only)}: {members}")
    return "\n".join(lines) + "\n"


def _render_deck_json(deck: Deck) -> str:
    payload = {
        "base": deck.base,
        "limit": deck.limit,
        "cards": [
            {"power": c.power, "coefficient": c.coefficient, "members": list(c.members)}
            for c in deck.cards
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _render_deck_csv(deck: Deck) -> str:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["power", "coefficient", "member"])
    for card in deck.cards:
        for n in card.members:
            writer.writerow([card.power, card.coefficient, n])
    return buf.getvalue()


def _cmd_deck(args: argparse.Namespace) -> int:
    deck = build_deck(args.base, args.limit)
    if args.format == "json":
        text = _render_deck_json(deck)
    elif args.format == "csv":
        text = _render_deck_csv(deck)
    else:
        text = _render_deck_text(deck, args.ascii)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _ask_yes_no(prompt: str) -> bool:
    while True:
        try:
            raw = input(prompt)
        except EOFError:
            raise ValueError("input ended before all cards were answered") from None
        answer = raw.strip().lower()
        if answer in ("y", "yes"):
            return True
        if answer in ("n", "no"):
            return False
        print("please answer y or n")


def _cmd_play(args: argparse.Namespace) -> int:
    session = new_session(args.base, args.limit)
    deck = session.deck
    print(
        f"Think of a number from 1 to {deck.limit}. "
        f"I will show you {len(deck.cards)} cards; answer y or n for each."
    )
    for i, card in enumerate(deck.cards):
        print()
        print(f"card {i + 1} of {len(deck.cards)}: {card_title(card, args.ascii)}")
        print(" ".join(map(str, card.members)) if card.members else "(no numbers this small)")
        answer = _ask_yes_no("is your number on this card? [y/n] ")
        submit_answer(session, AnswerEvent(session.id, i, answer))
    print()
    if session.state == "revealed":
        breakdown = " + ".join(
            _term(deck.base, card.coefficient, deck.base**card.power, args.ascii)
            for card, yes in zip(deck.cards, session.answers)
            if yes
        )
        print(f"your number is {session.outcome}  ({breakdown} = {session.outcome})")
        return 0
    explanations = {
        "ConflictingAnswers": "yes was answered for two cards of the same power",
        "EmptySelection": "no cards were selected, but the range starts at 1",
        "OutOfRange": "the answers add up to a number above the limit",
    }
    reason = explanations.get(session.error or "", "the answers were inconsistent")
    print(f"those answers do not match any number ({session.error}: {reason})")
    return 3


def _cmd_verify(args: argparse.Namespace) -> int:
    minimality = verify_card_minimality(args.n_max, args.b_max)
    dominance = verify_range_dominance(args.n_cards_max, args.b_max)
    if args.format == "json":
        payload = {
            "card_minimality": asdict(minimality),
            "range_dominance": asdict(dominance),
        }
        print(json.dumps(payload, indent=2))
    else:
        ties = ", ".join(f"({e.base}, {e.n})" for e in minimality.equalities) or "none"
        print(
            f"card minimality: n in [1, {minimality.n_max}], bases 3..{minimality.b_max}: "
            f"{len(minimality.violations)} violations"
        )
        print(f"  ties with base 2: {ties}")
        print(
            f"range dominance: cards in [1, {dominance.n_cards_max}], "
            f"bases 3..{dominance.b_max}: {len(dominance.violations)} violations"
        )
    return 0 if minimality.ok and dominance.ok else 4


def _parse_span(text: str) -> range:
    """Parse 'A-B' (inclusive) or a single integer into a range."""
    lo, sep, hi = text.partition("-")
    try:
        if sep:
            start, stop = int(lo), int(hi)
        else:
            start = stop = int(lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A-B, got {text!r}") from None
    if stop < start:
        raise argparse.ArgumentTypeError(f"empty span {text!r}")
    return range(start, stop + 1)


_FIGURES = ("3", "4", "5")


def _figure_series(which: str, args: argparse.Namespace) -> list[Series]:
    if which == "3":
        return cards_by_base_series(targets=args.targets, b_max=args.base_max)
    if which == "4":
        return cards_growth_series(bases=args.bases, n_max=args.n_max)
    return range_growth_series(bases=args.bases, n_cards_max=args.cards_max)


def _cmd_figures(args: argparse.Namespace) -> int:
    out_dir = Path(args.out_dir or os.environ.get(OUT_DIR_ENV, "."))
    out_dir.mkdir(parents=True, exist_ok=True)
    wanted = _FIGURES if args.which == "all" else (args.which,)
    for which in wanted:
        series = _figure_series(which, args)
        path = out_dir / f"figure{which}.{args.format}"
        if args.format == "json":
            write_series_json(series, path)
        else:
            write_series_csv(series, path)
        print(path)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(
        capacity=args.capacity,
        static_dir=args.static_dir,
        max_limit=args.max_limit,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cardguess",
        description="Number-guessing card decks in any integer base.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    deck = sub.add_parser("deck", help="print the deck for a base and limit")
    deck.add_argument("--base", type=int, required=True)
    deck.add_argument("--limit", type=int, required=True)
    deck.add_argument("--format", choices=("text", "json", "csv"), default="text")
    deck.add_argument("--ascii", action="store_true", help="plain ASCII card headers")
    deck.add_argument("--output", help="write to a file instead of stdout")
    deck.set_defaults(func=_cmd_deck)

    play = sub.add_parser("play", help="play one interactive game in the terminal")
    play.add_argument("--base", type=int, required=True)
    play.add_argument("--limit", type=int, required=True)
    play.add_argument("--ascii", action="store_true")
    play.set_defaults(func=_cmd_play)

    verify = sub.add_parser(
        "verify", help="sweep the card-minimality and range-dominance checks"
    )
    verify.add_argument("--n-max", type=int, default=100_000)
    verify.add_argument("--b-max", type=int, default=64)
    verify.add_argument("--n-cards-max", type=int, default=256)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=_cmd_verify)

    figures = sub.add_parser(
        "figures",
        help="export plot-ready data series "
        "(3: cards vs base; 4: cards vs n; 5: max range vs card count)",
    )
    figures.add_argument("--which", choices=_FIGURES + ("all",), default="all")
    figures.add_argument("--format", choices=("csv", "json"), default="csv")
    figures.add_argument(
        "--out-dir", help=f"output directory (default: ${OUT_DIR_ENV} or .)"
    )
    figures.add_argument(
        "--bases", type=_parse_span, default=range(2, 11), help="bases A-B for 4 and 5"
    )
    figures.add_argument(
        "--n-max", type=int, default=1024, help="largest n for figure 4"
    )
    figures.add_argument(
        "--targets", type=_parse_span, default=range(8, 17), help="target n A-B for figure 3"
    )
    figures.add_argument(
        "--base-max", type=int, default=16, help="largest base for figure 3"
    )
    figures.add_argument(
        "--cards-max", type=int, default=30, help="largest card count for figure 5"
    )
    figures.set_defaults(func=_cmd_figures)

    serve = sub.add_parser("serve", help="run the HTTP/JSON service")
    serve.add_argument("--host", default=os.environ.get("CARDGUESS_HOST", "127.0.0.1"))
    serve.add_argument(
        "--port", type=int, default=int(os.environ.get("CARDGUESS_PORT", "8000"))
    )
    serve.add_argument(
        "--capacity",
        type=int,
        default=int(os.environ.get("CARDGUESS_CAPACITY", "10000")),
        help="session store capacity (LRU eviction beyond)",
    )
    serve.add_argument(
        "--static-dir",
        default=os.environ.get("CARDGUESS_STATIC_DIR"),
        help="directory with the built web UI (optional)",
    )
    serve.add_argument(
        "--max-limit",
        type=int,
        default=int(os.environ.get("CARDGUESS_MAX_LIMIT", "10000")),
        help="largest accepted session limit",
    )
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
