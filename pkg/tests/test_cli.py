import io
import json

import pytest

from trinim import (
    Convention,
    Outcome,
    TrianglePosition,
    apply_move,
    classify,
    engine_move,
    is_terminal,
)
from trinim.cli import main, play_loop
from trinim.solver.indexing import iter_positions

NORMAL = Convention.NORMAL
MISERE = Convention.MISERE


class TestClassifyCommand:
    def test_p_position(self, capsys):
        assert main(["classify", "3,2,1"]) == 0
        captured = capsys.readouterr()
        assert captured.out == "P\n"
        assert "matched set S (rotation 0)" in captured.err

    def test_n_position_shows_constructive_move(self, capsys):
        assert main(["classify", "5,3,2"]) == 0
        captured = capsys.readouterr()
        assert captured.out == "N\nXY 4 0 -> 1,3,2\n"

    def test_misere_convention(self, capsys):
        assert main(["classify", "1,1,1", "--convention", "misere"]) == 0
        captured = capsys.readouterr()
        assert captured.out == "P\n"
        assert "matched set S1- (rotation" in captured.err

    def test_all_moves_exhaustive(self, capsys):
        assert main(["classify", "2,1,1", "--convention", "misere", "--all-moves"]) == 0
        captured = capsys.readouterr()
        assert captured.out == "N\nXY 1 0 -> 1,1,1\n"

    def test_all_moves_on_p_position_prints_none(self, capsys):
        assert main(["classify", "3,2,1", "--all-moves"]) == 0
        captured = capsys.readouterr()
        assert captured.out == "P\n"

    def test_bad_position(self, capsys):
        assert main(["classify", "bogus"]) == 1
        captured = capsys.readouterr()
        assert captured.err == "error: expected 'x,y,z', got 'bogus'\n"


class TestBestMoveCommand:
    def test_winning_position(self, capsys):
        assert main(["best-move", "5,3,2"]) == 0
        assert capsys.readouterr().out == "XY 4 0 -> 1,3,2\n"

    def test_losing_position_still_moves(self, capsys):
        assert main(["best-move", "3,2,1"]) == 0
        assert capsys.readouterr().out == "XY 1 0 -> 2,2,1\n"

    def test_terminal_position(self, capsys):
        assert main(["best-move", "0,0,0"]) == 0
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "terminal position: no moves" in captured.err


class TestGrundyCommand:
    def test_csv_output(self, capsys):
        assert main(["grundy", "--max-total", "1"]) == 0
        assert capsys.readouterr().out == (
            "x,y,z,outcome,grundy\n"
            "0,0,0,P,0\n"
            "0,0,1,N,1\n"
            "0,1,0,N,1\n"
            "1,0,0,N,1\n"
        )

    def test_csv_byte_identical_across_runs(self, capsys):
        main(["grundy", "--max-total", "7"])
        first = capsys.readouterr().out
        main(["grundy", "--max-total", "7"])
        assert capsys.readouterr().out == first

    def test_records_output(self, capsys):
        assert main(["grundy", "--max-total", "1", "--format", "records"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == '{"x":0,"y":0,"z":0,"outcome":"P","grundy":0}'
        assert len(lines) == 4
        assert all(set(json.loads(line)) == {"x", "y", "z", "outcome", "grundy"} for line in lines)

    def test_bound_too_large(self, capsys):
        assert main(["grundy", "--max-total", "9999"]) == 1
        assert "exceeds the oracle limit" in capsys.readouterr().err


class TestVerifyCommand:
    def test_clean_run(self, capsys):
        assert main(["verify", "--max-total", "16"]) == 0
        assert "all checks passed" in capsys.readouterr().out

    def test_records_format(self, capsys):
        assert main(["verify", "--max-total", "8", "--format", "records"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["ok"] is True
        assert payload["bound"] == 8
        assert payload["mismatch_count"] == 0

    def test_single_convention(self, capsys):
        assert main(["verify", "--max-total", "8", "--convention", "misere"]) == 0
        out = capsys.readouterr().out
        assert "misere" in out
        assert "normal outcomes" not in out

    def test_mismatches_exit_two(self, monkeypatch, capsys):
        class FakeReport:
            ok = False

            def to_text(self):
                return "1 mismatch"

        monkeypatch.setattr("trinim.cli.verify_theorems", lambda bound, conventions: FakeReport())
        assert main(["verify", "--max-total", "4"]) == 2


class TestExitCodes:
    def test_unknown_command(self, capsys):
        assert main(["shout"]) == 1

    def test_missing_argument(self, capsys):
        assert main(["classify"]) == 1

    def test_no_arguments(self, capsys):
        assert main([]) == 1

    def test_help_is_success(self, capsys):
        assert main(["--help"]) == 0
        assert "classify" in capsys.readouterr().out

    def test_internal_fault(self, monkeypatch, capsys):
        def boom(*args, **kwargs):
            raise RuntimeError("boom")

        monkeypatch.setattr("trinim.cli.classify", boom)
        assert main(["classify", "1,1,1"]) == 3
        assert "internal error: boom" in capsys.readouterr().err


def run_play(start, convention, human_first, inputs=()):
    feed = iter(inputs)

    def fake_input():
        try:
            return next(feed)
        except StopIteration:
            raise EOFError from None

    buffer = io.StringIO()
    code = play_loop(start, convention, human_first, input_fn=fake_input, out=buffer)
    return code, buffer.getvalue().splitlines()


class TestPlayLoop:
    def test_terminal_start_normal(self):
        code, lines = run_play(TrianglePosition(0, 0, 0), NORMAL, human_first=True)
        assert code == 0
        assert lines == [
            "position 0,0,0, normal play, you to move",
            "game over: no moves for you",
            "engine wins",
        ]

    def test_terminal_start_misere(self):
        _, lines = run_play(TrianglePosition(0, 0, 0), MISERE, human_first=True)
        assert lines[-1] == "you win"

    def test_engine_first_win(self):
        code, lines = run_play(TrianglePosition(1, 0, 0), NORMAL, human_first=False)
        assert code == 0
        assert lines == [
            "position 1,0,0, normal play, engine to move",
            "engine plays XY 1 0 -> 0,0,0",
            "game over: no moves for you",
            "engine wins",
        ]

    def test_bad_input_reprompts_without_consuming_turn(self):
        code, lines = run_play(
            TrianglePosition(1, 0, 0),
            NORMAL,
            human_first=True,
            inputs=["bogus", "ZX 9 0", "XY 1 0"],
        )
        assert code == 0
        assert "invalid input: expected 'XY i j', got 'bogus'" in lines
        assert "illegal move ZX 9 0 from 1,0,0" in lines
        assert "you play XY 1 0 -> 0,0,0" in lines
        assert lines[-2:] == ["game over: no moves for the engine", "you win"]

    def test_resign(self):
        _, lines = run_play(TrianglePosition(5, 3, 2), NORMAL, human_first=True, inputs=["q"])
        assert lines[-1] == "you resign; engine wins"

    def test_end_of_input_resigns(self):
        code, lines = run_play(TrianglePosition(5, 3, 2), NORMAL, human_first=True)
        assert code == 0
        assert lines[-1] == "you resign; engine wins"


class TestEngineSelfPlay:
    @pytest.mark.parametrize("convention", [NORMAL, MISERE])
    def test_first_mover_wins_iff_n_position(self, convention):
        # The engine must never lose a game it starts from a winning position.
        # Self-play over every start makes that a sharp invariant: with both
        # sides playing the engine policy, the first mover wins exactly the
        # N-positions.
        for x, y, z in iter_positions(12):
            start = TrianglePosition(x, y, z)
            position, turn = start, 0
            while not is_terminal(position):
                position = apply_move(position, engine_move(position, convention))
                turn ^= 1
            winner = turn if convention is MISERE else 1 - turn
            expected = 0 if classify(start, convention).outcome is Outcome.N else 1
            assert winner == expected, (start, convention)
