"""End-to-end CLI behaviour: output shape, exit codes, determinism."""

import csv
import io
import json

import pytest

from tkc.cli import CSV_FIELDS, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- invariants --------------------------------------------------------------

def test_invariants_text(capsys):
    code, out, _ = run(capsys, "invariants", "8", "3")
    assert code == 0
    assert "T(8,3)" in out
    assert "crosscap=2" in out and "boundary_slope=24" in out


def test_invariants_json_decimal_strings(capsys):
    code, out, _ = run(capsys, "invariants", "25", "9", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["input"] == {"p": "25", "q": "9"}
    assert record["type"] == "B"
    assert record["witness_x"] == "11"
    assert record["crosscap"] == "5"
    assert record["boundary_slope"] == "226"
    # every value is a string, never a bare number
    assert all(isinstance(v, str) for k, v in record.items() if k != "input")


def test_invariants_csv(capsys):
    code, out, _ = run(capsys, "invariants", "7", "5", "--format", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == ",".join(CSV_FIELDS)
    assert row == "7,5,odd,A,4,3,34,12,3,14"


def test_invariants_normalizes_input(capsys):
    code, out, _ = run(capsys, "invariants", "-3", "2")
    assert code == 0
    assert "T(2,3)" in out


def test_invariants_unknot(capsys):
    code, out, _ = run(capsys, "invariants", "1", "9")
    assert code == 0
    assert "unknot" in out and "crosscap=0" in out


def test_invariants_bad_input(capsys):
    code, _, err = run(capsys, "invariants", "4", "6")
    assert code == 1 and "coprime" in err
    code, _, err = run(capsys, "invariants", "0", "3")
    assert code == 1
    code, _, err = run(capsys, "invariants", "8")
    assert code == 1  # usage error is 1, never 2


# --- nxy / cf ----------------------------------------------------------------

def test_nxy_remark_values(capsys):
    code, out, _ = run(capsys, "nxy", "26", "25")
    assert code == 0
    assert "N(26,25) = 13" in out
    code, out, _ = run(capsys, "nxy", "28", "25")
    assert code == 0
    assert "N(28,25) = 6" in out
    assert "sigma = 12" in out


def test_nxy_rejects_odd_numerator(capsys):
    code, _, err = run(capsys, "nxy", "7", "9")
    assert code == 1
    assert "even" in err


def test_cf_output(capsys):
    code, out, _ = run(capsys, "cf", "226", "625")
    assert code == 0
    assert "[0,2,1,3,3,1,3,1,2]" in out
    assert "convergent=226/625" in out
    code, out, _ = run(capsys, "cf", "5", "1")
    assert "[5]" in out
    code, _, err = run(capsys, "cf", "4", "6")
    assert code == 1


# --- sum -----------------------------------------------------------------------

def test_sum_golden(capsys):
    code, out, _ = run(capsys, "sum", "8:3", "7:5")
    assert code == 0
    assert "total: 5" in out
    code, out, _ = run(capsys, "sum", "2:3")
    assert "total: 1" in out
    code, out, _ = run(capsys, "sum", "8:3", "1:5")
    assert "total: 2" in out and "unknot" in out


def test_sum_bad_pair(capsys):
    code, _, err = run(capsys, "sum", "8:3", "4:6")
    assert code == 1
    code, _, err = run(capsys, "sum", "8-3")
    assert code == 1


# --- sweep ---------------------------------------------------------------------

def sweep_to(capsys, tmp_path, name, fmt, max_p="9", max_q="9"):
    out_path = tmp_path / name
    code, _, _ = run(capsys, "sweep", "--max-p", max_p, "--max-q", max_q,
                     "--out", str(out_path), "--format", fmt)
    assert code == 0
    return out_path.read_text(encoding="utf-8")


def test_sweep_contains_worked_examples(capsys, tmp_path):
    text = sweep_to(capsys, tmp_path, "sweep.csv", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    by_pq = {(r["p"], r["q"]): r for r in rows}
    assert by_pq[("8", "3")]["crosscap"] == "2"
    assert by_pq[("8", "3")]["boundary_slope"] == "24"
    assert by_pq[("7", "5")]["crosscap"] == "3"
    assert by_pq[("7", "5")]["type"] == "A"
    # normalized rows are unique and sorted
    pairs = [(int(r["p"]), int(r["q"])) for r in rows]
    assert pairs == sorted(set(pairs))


def test_sweep_includes_25_9(capsys, tmp_path):
    text = sweep_to(capsys, tmp_path, "sweep.csv", "csv", max_p="25", max_q="9")
    rows = {(r["p"], r["q"]): r for r in csv.DictReader(io.StringIO(text))}
    assert rows[("25", "9")]["crosscap"] == "5"
    assert rows[("25", "9")]["boundary_slope"] == "226"


def test_sweep_empty(capsys, tmp_path):
    text = sweep_to(capsys, tmp_path, "sweep.csv", "csv", max_p="2", max_q="2")
    assert text == ",".join(CSV_FIELDS) + "\n"


def test_sweep_deterministic(capsys, tmp_path):
    first = sweep_to(capsys, tmp_path, "a.csv", "csv", max_p="30", max_q="30")
    second = sweep_to(capsys, tmp_path, "b.csv", "csv", max_p="30", max_q="30")
    assert first == second


def test_sweep_csv_json_carry_identical_data(capsys, tmp_path):
    csv_text = sweep_to(capsys, tmp_path, "s.csv", "csv", max_p="12", max_q="12")
    json_text = sweep_to(capsys, tmp_path, "s.json", "json", max_p="12", max_q="12")
    csv_rows = [dict(r) for r in csv.DictReader(io.StringIO(csv_text))]
    json_rows = json.loads(json_text)
    assert csv_rows == json_rows


def test_sweep_bad_bounds_and_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "sweep", "--max-p", "1", "--max-q", "9",
                       "--out", str(tmp_path / "x.csv"))
    assert code == 1
    code, _, err = run(capsys, "sweep", "--max-p", "9", "--max-q", "9",
                       "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 1 and "cannot write" in err


# --- verify ----------------------------------------------------------------------

def test_verify_pass_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "criterion", "--max-p", "30")
    assert code == 0
    assert "PASS" in out
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-p", "20")
    assert code == 0
    assert out.count("PASS") >= 8  # seven parts plus the total line
    code, _, err = run(capsys, "verify", "--suite", "bogus", "--max-p", "10")
    assert code == 1
