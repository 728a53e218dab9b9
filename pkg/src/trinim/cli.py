"""Command-line front door.

Exit codes: 0 success, 1 usage or input error, 2 verification found
mismatches, 3 internal fault. Machine-readable output goes to stdout,
diagnostics and prompts-free notes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence, TextIO

from .classify import all_winning_moves, classify, engine_move, winning_move
from .core import (
    Convention,
    TriangleMove,
    TrianglePosition,
    apply_move,
    format_move,
    format_position,
    is_legal_move,
    is_terminal,
    parse_move,
    parse_position,
)
from .errors import TrinimError
from .solver import solve_triangle, verify_theorems

DEFAULT_PLAY_START = "5,3,2"


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; this interface uses 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_convention(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--convention",
        choices=["normal", "misere"],
        default="normal",
        help="who wins on the last move: normal (mover wins) or misere (mover loses)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trinim", description="Triangle game classifier, solver and engine.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("classify", help="classify a position and show winning moves")
    p.add_argument("position", help="position as x,y,z")
    _add_convention(p)
    p.add_argument(
        "--all-moves",
        action="store_true",
        help="list every winning move (exhaustive), not just the constructive one",
    )
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("best-move", help="print the engine's move for a position")
    p.add_argument("position", help="position as x,y,z")
    _add_convention(p)
    p.set_defaults(handler=_cmd_best_move)

    p = sub.add_parser("grundy", help="solve and print the grundy table")
    p.add_argument("--max-total", type=int, required=True, help="largest token total to solve")
    p.add_argument("--format", choices=["csv", "records"], default="csv")
    p.set_defaults(handler=_cmd_grundy)

    p = sub.add_parser("verify", help="check the classifier against the brute-force solver")
    p.add_argument("--max-total", type=int, required=True, help="largest token total to check")
    p.add_argument("--convention", choices=["both", "normal", "misere"], default="both")
    p.add_argument("--format", choices=["text", "records"], default="text")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("play", help="play against the engine in the terminal")
    p.add_argument("--start", default=DEFAULT_PLAY_START, help="starting position as x,y,z")
    _add_convention(p)
    p.add_argument("--human-first", action="store_true", help="you move first (default: engine)")
    p.set_defaults(handler=_cmd_play)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8173)
    p.add_argument("--static-dir", default=None, help="directory with the built web UI")
    p.add_argument(
        "--allow-origin",
        action="append",
        default=[],
        dest="allow_origins",
        metavar="ORIGIN",
        help="permit cross-origin requests from ORIGIN (repeatable)",
    )
    p.set_defaults(handler=_cmd_serve)

    return parser


def _cmd_classify(args: argparse.Namespace) -> int:
    position = parse_position(args.position)
    convention = Convention(args.convention)
    result = classify(position, convention)
    print(result.outcome.value)
    if result.matched_set is not None:
        print(
            f"matched set {result.matched_set} (rotation {result.witness_rotation})",
            file=sys.stderr,
        )
    if args.all_moves:
        moves = all_winning_moves(position, convention)
    else:
        best = winning_move(position, convention)
        moves = [] if best is None else [best]
    for move in moves:
        print(f"{format_move(move)} -> {format_position(apply_move(position, move))}")
    return 0


def _cmd_best_move(args: argparse.Namespace) -> int:
    position = parse_position(args.position)
    convention = Convention(args.convention)
    move = engine_move(position, convention)
    if move is None:
        print("terminal position: no moves", file=sys.stderr)
        return 0
    print(f"{format_move(move)} -> {format_position(apply_move(position, move))}")
    return 0


def _cmd_grundy(args: argparse.Namespace) -> int:
    table = solve_triangle(args.max_total, Convention.NORMAL, grundy=True)
    if args.format == "csv":
        table.write_csv(sys.stdout)
    else:
        for x, y, z, out, g in table.iter_rows():
            record = {"x": x, "y": y, "z": z, "outcome": out.value, "grundy": g}
            print(json.dumps(record, separators=(",", ":")))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    picked = {
        "both": (Convention.NORMAL, Convention.MISERE),
        "normal": (Convention.NORMAL,),
        "misere": (Convention.MISERE,),
    }[args.convention]
    report = verify_theorems(args.max_total, picked)
    if args.format == "records":
        print(json.dumps(report.summary(), separators=(",", ":")))
    else:
        print(report.to_text())
    return 0 if report.ok else 2


def _cmd_play(args: argparse.Namespace) -> int:
    start = parse_position(args.start)
    convention = Convention(args.convention)
    return play_loop(start, convention, human_first=args.human_first)


def play_loop(
    start: TrianglePosition,
    convention: Convention,
    human_first: bool,
    *,
    input_fn: Callable[[], str] = input,
    out: Optional[TextIO] = None,
) -> int:
    """Alternate human and engine moves until the terminal position.

    The player facing the terminal position has no move: under normal play
    they lose (the other player moved last and wins), under misere they win.
    Invalid or illegal input re-prompts without consuming the turn; 'q' or end
    of input resigns.
    """
    stream = out if out is not None else sys.stdout
    position = start
    human_turn = human_first

    def say(message: str) -> None:
        print(message, file=stream)

    first = "you" if human_first else "engine"
    say(f"position {format_position(position)}, {convention.value} play, {first} to move")
    while True:
        if is_terminal(position):
            human_wins = (convention is Convention.MISERE) == human_turn
            say(f"game over: no moves for {'you' if human_turn else 'the engine'}")
            say("you win" if human_wins else "engine wins")
            return 0
        if human_turn:
            move = _prompt_move(position, input_fn, stream)
            if move is None:
                say("you resign; engine wins")
                return 0
            position = apply_move(position, move)
            say(f"you play {format_move(move)} -> {format_position(position)}")
        else:
            move = engine_move(position, convention)
            position = apply_move(position, move)
            say(f"engine plays {format_move(move)} -> {format_position(position)}")
        human_turn = not human_turn


def _prompt_move(
    position: TrianglePosition, input_fn: Callable[[], str], stream: TextIO
) -> Optional[TriangleMove]:
    while True:
        print(
            f"your move from {format_position(position)} (edge take give, e.g. XY 2 1; q quits):",
            file=stream,
        )
        try:
            raw = input_fn()
        except EOFError:
            return None
        raw = raw.strip()
        if raw.lower() in {"q", "quit"}:
            return None
        try:
            move = parse_move(raw)
        except TrinimError as exc:
            print(f"invalid input: {exc}", file=stream)
            continue
        if not is_legal_move(position, move):
            print(f"illegal move {format_move(move)} from {format_position(position)}", file=stream)
            continue
        return move


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import create_app

    app = create_app(static_dir=args.static_dir, allow_origins=tuple(args.allow_origins))
    uvicorn.run(app, host="127.0.0.1", port=args.port, log_level="warning")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        return 0 if exc.code is None else 1
    try:
        return args.handler(args)
    except BrokenPipeError:
        try:
            sys.stdout.close()
        except Exception:
            pass
        return 0
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return 1
    except TrinimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - internal fault path
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
