import json
import subprocess
import sys
from pathlib import Path

import pytest

from lieposet.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(argv, capsys):
    status = main(argv)
    out, err = capsys.readouterr()
    return status, out, err


def test_analyze_path(capsys):
    status, out, _ = run(["analyze", str(DATA / "path3.json")], capsys)
    report = json.loads(out)
    assert status == 0
    assert (report["dim"], report["index"], report["contact"]) == (5, 1, True)
    assert report["determinant"] == 1


def test_analyze_frobenius_text(capsys):
    status, out, _ = run(["analyze", str(DATA / "frobenius3.json"), "--format", "text"], capsys)
    assert status == 0
    assert "frobenius    True" in out


def test_invalid_input_exit_one(capsys):
    status, _, err = run(["analyze", str(DATA / "invalid_cover.json")], capsys)
    assert status == 1 and "CoverViolation" in err


def test_order_violation_message(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"family": "C", "n": 2, "relations": [[2, -1]]}))
    status, _, err = run(["index", str(f)], capsys)
    assert status == 1 and "OrderViolation: 2 ≺ −1" in err


def test_missing_file(capsys):
    status, _, err = run(["analyze", "/nonexistent.json"], capsys)
    assert status == 1


def test_inconsistency_exit_two(monkeypatch, capsys):
    import lieposet.invariants as inv
    monkeypatch.setattr(inv, "max_sampled_rank", lambda *a, **k: 0)
    status, _, err = run(["index", str(DATA / "path3.json")], capsys)
    assert status == 2 and "inconsistency" in err


def test_contact_and_index_commands(capsys):
    status, out, _ = run(["contact", str(DATA / "edge_triangle.json")], capsys)
    cert = json.loads(out)
    assert status == 0 and cert["verdict"] == "contact"
    status, out, _ = run(["index", str(DATA / "frobenius3.json")], capsys)
    assert json.loads(out)["index"] == 0


def test_verify_exit_code(capsys):
    status, out, _ = run(["verify", "--family", "C", "--n", "3"], capsys)
    assert status == 0 and json.loads(out)["failures"] == []


def test_verify_failures_exit_nonzero(monkeypatch, capsys):
    import lieposet.enumeration as en
    monkeypatch.setattr(en, "check_poset", lambda *a, **k: (1, ["forced"]))
    status, out, _ = run(["verify", "--family", "C", "--n", "2"], capsys)
    assert status != 0 and json.loads(out)["failures"]


def test_enumerate_jsonl(capsys):
    status, out, _ = run(["enumerate", "--family", "C", "--n", "2"], capsys)
    lines = out.strip().splitlines()
    assert status == 0
    assert len(lines) == 11
    assert json.loads(lines[-1])["summary"] == {"family": "C", "n": 2, "candidateCount": 12, "validCount": 10}


def test_export_dot(capsys):
    status, out, _ = run(["export-dot", str(DATA / "frobenius3.json"), "--graph", "relation"], capsys)
    assert status == 0 and "2 -- 3 [style=dashed];" in out
    status, out, _ = run(["export-dot", str(DATA / "frobenius3.json"), "--graph", "hasse"], capsys)
    assert out.startswith("digraph Hasse")


def test_prime_checked(capsys):
    status, _, err = run(["index", str(DATA / "path3.json"), "--prime", "100"], capsys)
    assert status == 1 and "not prime" in err


def test_env_overrides_and_flag_wins(monkeypatch, capsys):
    monkeypatch.setenv("LIEPOSET_SEED", "7")
    monkeypatch.setenv("LIEPOSET_PRIME", "1000003")
    _, out, _ = run(["index", str(DATA / "path3.json")], capsys)
    r = json.loads(out)
    assert (r["seed"], r["prime"]) == (7, 1000003)
    _, out, _ = run(["index", str(DATA / "path3.json"), "--seed", "2"], capsys)
    assert json.loads(out)["seed"] == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    status, out, _ = run(["analyze", str(DATA / "path3.json"), "-o", str(target)], capsys)
    assert status == 0 and out == ""
    assert json.loads(target.read_text())["index"] == 1


def test_byte_identical_runs():
    cmd = [sys.executable, "-m", "lieposet.cli", "enumerate", "--family", "C", "--n", "2", "--seed", "4"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
