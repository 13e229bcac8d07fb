from __future__ import annotations

import json

import pytest

from wardengame.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_golden_rank_four(self, capsys):
        code, out, _ = run(capsys, "generate", "--m", "2", "--n", "4")
        assert code == 0 and out == "0000100110101111\n"

    @pytest.mark.parametrize("method", ["game", "greedy", "fkm"])
    def test_methods_agree(self, capsys, method):
        code, out, _ = run(capsys, "generate", "--m", "3", "--n", "3", "--method", method)
        assert code == 0 and out == "000100201101202102211121222\n"

    def test_doc_format(self, capsys):
        code, out, _ = run(capsys, "generate", "--m", "2", "--n", "2", "--format", "doc")
        assert code == 0
        assert json.loads(out) == {"m": 2, "n": 2, "digits": [0, 0, 1, 1], "canonical": True}

    def test_cap_exceeded_is_a_domain_error(self, capsys):
        code, _, err = run(capsys, "generate", "--m", "10", "--n", "9")
        assert code == 1 and "error:" in err


class TestChain:
    def test_goal_word_golden(self, capsys):
        code, out, _ = run(capsys, "chain", "--goal", "321")
        assert code == 0
        assert out == "(321)00010110200211120121220221300301310311320321\n"

    def test_uniform_via_word(self, capsys):
        code, out, _ = run(capsys, "chain", "--goal", "222")
        assert code == 0 and out == "(222)000100201101202102211121222\n"


class TestRemoteness:
    def test_uniform(self, capsys):
        code, out, _ = run(capsys, "remoteness", "--m", "3", "--n", "3", "--position", "001")
        assert code == 0 and out == "4\n"

    def test_goal_word_unwinnable(self, capsys):
        code, out, _ = run(capsys, "remoteness", "--goal", "314", "--position", "402")
        assert code == 0 and out == "unwinnable\n"

    def test_digits_above_the_goal_alphabet(self, capsys):
        code, out, _ = run(capsys, "remoteness", "--goal", "314", "--position", "090")
        assert code == 0 and out == "unwinnable\n"

    def test_coins(self, capsys):
        code, out, _ = run(
            capsys, "remoteness", "--m", "2", "--n", "5", "--position", "HTTTH", "--coins"
        )
        assert code == 0 and out == "22\n"

    def test_needs_a_spec(self, capsys):
        code, _, err = run(capsys, "remoteness", "--position", "001")
        assert code == 1 and "error:" in err


class TestLocate:
    def test_goal_window(self, capsys):
        code, out, _ = run(capsys, "locate", "--m", "3", "--n", "3", "--word", "222")
        assert code == 0 and out == "24\n"

    def test_wrapping_window(self, capsys):
        code, out, _ = run(capsys, "locate", "--m", "3", "--n", "3", "--word", "220")
        assert code == 0 and out == "25\n"

    def test_absent_word(self, capsys):
        code, _, err = run(capsys, "locate", "--m", "2", "--n", "3", "--word", "012")
        assert code == 1 and "error:" in err


class TestVerify:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-states", "256")
        assert code == 0
        assert "checked" in out


class TestSimulate:
    def test_optimal_line_from_001(self, capsys):
        code, out, _ = run(
            capsys, "simulate", "--spec", "uniform:3,3", "--start", "001",
            "--prisoner", "optimal", "--warden", "optimal",
        )
        assert code == 0
        assert out.splitlines() == [
            "1 warden 0 000",
            "2 prisoner 2 200",
            "3 prisoner 2 220",
            "4 prisoner 2 222",
            "won 4",
        ]

    def test_deterministic_with_a_seed(self, capsys):
        args = (
            "simulate", "--spec", "uniform:2,5", "--start", "THTTH", "--coins",
            "--prisoner", "basic", "--warden", "random", "--seed", "11",
        )
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0 and out1 == out2
        assert out1.splitlines()[-1].startswith("won")

    def test_goal_as_start(self, capsys):
        code, out, _ = run(
            capsys, "simulate", "--spec", "uniform:3,3", "--start", "222",
            "--goal-as-start",
        )
        assert code == 0 and out.splitlines()[-1] == "won 27"

    def test_word_spec(self, capsys):
        code, out, _ = run(
            capsys, "simulate", "--spec", "word:314", "--start", "042",
            "--prisoner", "basic", "--warden", "never_decrease",
        )
        assert code == 0 and out.splitlines()[-1] == "won 4"


class TestPuzzle:
    def test_prime_answer_is_stable_and_cross_checked(self, capsys):
        outputs = {run(capsys, "puzzle", "prime")[1] for _ in range(3)}
        assert len(outputs) == 1
        text = outputs.pop()
        assert text.startswith("start 88  limit 19\n")
        assert "verdict:" in text
        assert "first move:" in text or "not winnable" in text or "unwinnable" in text
        assert "cross-check: depth-limited minimax agrees" in text

    def test_start_at_a_prime(self, capsys):
        code, out, _ = run(capsys, "puzzle", "prime", "--start", "02")
        assert code == 0 and "winnable in 0 moves" in out


class TestUsageErrors:
    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2

    def test_missing_required_argument_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["generate", "--m", "2"])
        assert excinfo.value.code == 2
