"""Command-line interface: subcommands, exit codes, b-file output."""

import pytest

from dequesort.bfile import format_b_file, parse_b_file
from dequesort.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTest:
    def test_original_rejects_flaw_case(self, capsys):
        code, out, _ = run(capsys, "test", "--class", "deque", "--variant", "original", "2 5 4 1 6 3")
        assert (code, out.strip()) == (1, "false")

    def test_corrected_accepts_flaw_case(self, capsys):
        code, out, _ = run(capsys, "test", "--class", "deque", "2 5 4 1 6 3")
        assert (code, out.strip()) == (0, "true")

    def test_pstacks(self, capsys):
        code, out, _ = run(capsys, "test", "--class", "pstacks", "2 3 4 1")
        assert (code, out.strip()) == (1, "false")

    def test_bad_perm_is_usage_error(self, capsys):
        code, _, err = run(capsys, "test", "--class", "deque", "1 1")
        assert code == 2 and "error" in err

    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["test", "--class", "bogus", "1"])
        assert info.value.code == 2


class TestWitness:
    def test_sortable(self, capsys):
        from dequesort.oracle import replay_word

        code, out, _ = run(capsys, "witness", "2 5 4 1 6 3")
        assert code == 0
        assert replay_word((2, 5, 4, 1, 6, 3), out.strip()).complete

    def test_unsortable(self, capsys):
        code, out, _ = run(capsys, "witness", "5 2 3 4 1")
        assert (code, out.strip()) == (1, "NOT SORTABLE")


class TestReplay:
    def test_full_sort(self, capsys):
        code, out, _ = run(capsys, "replay", "1", "ay")
        assert (code, out.strip()) == (0, "sorted")

    def test_partial_run_shows_state(self, capsys):
        code, out, _ = run(capsys, "replay", "2 3 1", "ab")
        assert code == 1
        assert out.strip() == "output 1..0 | deque 2 3 | input 1"

    def test_illegal_word(self, capsys):
        code, _, err = run(capsys, "replay", "1", "y")
        assert code == 3 and "pop" in err


class TestCount:
    def test_dp_deque(self, capsys):
        code, out, _ = run(capsys, "count", "--class", "deque", "--method", "dp", "--max-n", "5")
        assert code == 0
        assert out.splitlines()[-1] == "5 116"

    def test_tree_stack(self, capsys):
        code, out, _ = run(capsys, "count", "--class", "stack", "--method", "tree", "--max-n", "5")
        assert code == 0
        assert parse_b_file(out) == {1: 1, 2: 2, 3: 5, 4: 14, 5: 42}

    def test_oracle_pstacks(self, capsys):
        code, out, _ = run(capsys, "count", "--class", "pstacks", "--method", "oracle", "--max-n", "4")
        assert code == 0
        assert out.splitlines() == ["1 1", "2 2", "3 6", "4 23"]

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "seq.txt"
        code, out, _ = run(capsys, "count", "--class", "deque", "--method", "dp",
                           "--max-n", "3", "--out", str(target))
        assert code == 0 and out == ""
        assert parse_b_file(target.read_text()) == {1: 1, 2: 2, 3: 6}

    def test_dp_stack_combo_rejected(self, capsys):
        code, _, err = run(capsys, "count", "--class", "stack", "--method", "dp", "--max-n", "3")
        assert code == 2 and "deque|pstacks" in err


class TestVerify:
    def test_ok(self, capsys):
        code, out, _ = run(capsys, "verify-appendix", "--class", "pstacks", "--max-n", "9")
        assert code == 0
        assert out.splitlines()[-1] == "9 93944 ok"

    def test_max_n_beyond_table(self, capsys):
        code, _, err = run(capsys, "verify-appendix", "--class", "deque", "--max-n", "99")
        assert code == 2


class TestDek:
    def test_experiment(self, capsys):
        code, out, _ = run(capsys, "dek", "experiment", "--max-n", "4")
        assert code == 0
        assert "agree" in out


def test_b_file_round_trip():
    text = format_b_file([5, 6, 7], start=3)
    assert text == "3 5\n4 6\n5 7\n"
    assert parse_b_file("# comment\n\n3 5\n4 6\n5 7\n") == {3: 5, 4: 6, 5: 7}
