from __future__ import annotations

import json
import subprocess
import sys

import pytest

from matchseq.cli import main, table_rows


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_even(capsys):
    code, out, _ = run(["construct", "--n", "8", "--r", "3"], capsys)
    assert code == 0
    assert out.startswith("# case even_n value 11 claimed 11")


def test_construct_uncovered_exit_code(capsys):
    code, _, err = run(["construct", "--n", "9", "--r", "3", "--cyclic"], capsys)
    assert code == 2
    assert "odd n and odd r" in err


def test_construct_centre_json(capsys):
    code, out, _ = run(["construct", "--n", "7", "--r", "3", "--cyclic", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert (data["value"], data["case_tag"]) == (10, "center_odd")
    assert len(data["edges"]) == 21


def test_construct_output_is_byte_stable(capsys):
    _, first, _ = run(["construct", "--n", "11", "--r", "4", "--cyclic"], capsys)
    _, second, _ = run(["construct", "--n", "11", "--r", "4", "--cyclic"], capsys)
    assert first == second


def test_eval_round_trip(tmp_path, capsys):
    _, out, _ = run(["construct", "--n", "9", "--r", "2", "--format", "json"], capsys)
    path = tmp_path / "k9.json"
    path.write_text(out)
    code, out, _ = run(["eval", "--input", str(path), "--r", "2"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "value 8"


def test_eval_bad_input(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("4 2\n0 1\n0 9\n")
    code, _, err = run(["eval", "--input", str(path), "--r", "1"], capsys)
    assert code == 1
    assert "input error" in err
    code, _, _ = run(["eval", "--input", str(tmp_path / "missing.txt"), "--r", "1"], capsys)
    assert code == 1


def test_exact_complete(capsys):
    code, out, _ = run(["exact", "--complete", "5", "--r", "1", "--cyclic", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert (data["optimum"], data["exhausted"]) == (1, True)


def test_exact_graph_file(tmp_path, capsys):
    path = tmp_path / "c4.txt"
    path.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
    code, out, _ = run(["exact", "--graph", str(path), "--r", "1", "--cyclic"], capsys)
    assert code == 0
    assert out.startswith("# optimum 1 exhausted true")


def test_decompose(capsys):
    code, out, _ = run(["decompose", "--n", "7", "--kind", "R", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["valid"]
    code, _, _ = run(["decompose", "--n", "8", "--kind", "walecki"], capsys)
    assert code == 1
    code, out, _ = run(["decompose", "--n", "16", "--kind", "matching", "--c", "5"], capsys)
    assert code == 0 and "parts=15" in out


def test_verify_corpus(capsys):
    code, out, _ = run(["verify-corpus"], capsys)
    assert code == 0
    assert [line.split("\t")[:2] for line in out.splitlines()] == [
        ["k7_r2", "pass"], ["k7_r4", "pass"], ["k9_r2", "pass"]]


def test_table_even_n_cells_equal_bound(capsys):
    code, out, _ = run(["table", "--n-max", "6", "--r-max", "3", "--budget", "0"], capsys)
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    for n, r, bound, constructed, oracle, provenance, tag in rows:
        if int(n) % 2 == 0:
            assert constructed == bound
            assert provenance == "constructed"
        assert oracle == "-"


def test_table_shows_gap_between_oracle_and_bound():
    row = next(r for r in table_rows(5, 1, True, 100_000) if r["n"] == 5)
    assert (row["oracle"], row["bound"], row["exhausted"]) == (1, 2, True)
    assert row["provenance"] == "oracle"


def test_table_budget_zero_is_bound_only_for_uncovered():
    rows = list(table_rows(5, 3, True, 0, n_min=5))
    assert {r["r"]: r["provenance"] for r in rows} == {1: "bound-only", 2: "constructed", 3: "bound-only"}


def test_hyper_command(capsys):
    code, out, _ = run(["hyper", "--n", "6", "--k", "3", "--r", "2", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["target"] <= data["value"] <= data["upper"]
    code, _, _ = run(["hyper", "--n", "7", "--k", "3", "--r", "1"], capsys)
    assert code == 1


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["construct", "--n", "x"])
    assert info.value.code == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "matchseq", "verify-corpus"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.count("pass") == 3
