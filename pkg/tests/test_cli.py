import csv
import io
import json
import subprocess
import sys

import pytest

from qfibstat.cli import run_capture
from qfibstat.combinat import SetPartition
from qfibstat.poly import LaurentPoly


def test_enumerate_stats():
    code, out, _ = run_capture(["enumerate", "--n", "5", "--avoid", "13/2,123", "--stats"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["partition", "ls", "rb", "s", "d"]
    assert len(lines) == 9


def test_enumerate_json_round_trips():
    code, out, _ = run_capture(["enumerate", "--n", "4", "--avoid", "13/2", "--stats",
                                "--format", "json"])
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 8
    for rec in doc["partitions"]:
        pi = SetPartition.from_json(rec["partition"])
        assert str(pi) == rec["text"]
        assert SetPartition.parse(rec["text"]) == pi


def test_enumerate_csv():
    code, out, _ = run_capture(["enumerate", "--n", "3", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["partition"] and len(rows) == 6


def test_enumerate_count_and_ceiling(monkeypatch):
    assert run_capture(["enumerate", "--n", "20", "--avoid", "13/2", "--count"])[1] == "524288\n"
    code, _, err = run_capture(["enumerate", "--n", "13"])
    assert code == 3 and "ceiling" in err
    monkeypatch.setenv("QFIB_CEILING", "4")
    assert run_capture(["enumerate", "--n", "5", "--avoid", "13/2"])[0] == 3


def test_poly():
    assert run_capture(["poly", "--family", "F", "--n", "3"]) == (0, "q^3 + q^2 + q\n", "")
    code, out, _ = run_capture(["poly", "--family", "Fxy", "--n", "4", "--a", "1",
                                "--format", "json"])
    doc = json.loads(out)
    assert LaurentPoly.parse(doc["poly"]).evaluate() == 5
    code, out, _ = run_capture(["poly", "--family", "FC", "--n", "5", "--at", "x=1,y=1,q=1"])
    assert out == "8\n"
    assert run_capture(["poly", "--family", "F", "--n", "3", "--a", "1"])[0] == 2
    assert run_capture(["poly", "--family", "F", "--n", "3", "--format", "csv"])[0] == 2


def test_biject():
    assert run_capture(["biject", "--map", "complement", "--input", "12/3"])[1] == "1/23\n"
    assert run_capture(["biject", "--map", "phi", "--input", "1/2/3"])[1] == "2,1\n"
    assert run_capture(["biject", "--map", "phi-inv", "--input", "2,1", "--n", "3"])[1] == "1/2/3\n"
    assert run_capture(["biject", "--map", "binary", "--input", "1/2/34/56"])[1] == "00101\n"
    assert run_capture(["biject", "--map", "binary-inv", "--input", "00101"])[1] == "1/2/34/56\n"
    assert run_capture(["biject", "--map", "morse-inv", "--input", "..-"])[1] == "1/2/34\n"
    code, out, _ = run_capture(["biject", "--map", "shift", "--input", "134/25", "--k", "2"])
    assert out == "_ _ /356/47\n"
    assert run_capture(["biject", "--map", "complement", "--input", "13/2"])[0] == 2
    assert run_capture(["biject", "--map", "phi-inv", "--input", "2"])[0] == 2


def test_minor_all_prints_three_identical():
    code, out, _ = run_capture(["minor", "--rows", "0,1", "--cols", "4,6", "--method", "all"])
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 3 and len(set(lines)) == 1
    closed = run_capture(["minor", "--rows", "0,1", "--cols", "4,6", "--method", "closed"])[1]
    assert closed.strip() == lines[0] == "x*y^4*q^11"


def test_minor_errors():
    assert run_capture(["minor", "--rows", "0,1", "--cols", "4"])[0] == 2
    assert run_capture(["minor", "--rows", "0,2", "--cols", "1,3", "--method", "closed"])[0] == 2
    assert run_capture(["minor", "--rows", "a", "--cols", "1"])[0] == 2


def test_verify_single_and_formats():
    code, out, _ = run_capture(["verify", "--identity", "eq-box", "--deterministic"])
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run_capture(["verify", "--identity", "eq-box", "--identity", "prop3.1-rec",
                                "--format", "csv", "--deterministic"])
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["name", "status", "instances", "refinement_classes"]
    assert [r[0] for r in rows[1:]] == ["prop3.1-rec", "eq-box"]


def test_verify_failure_and_vacuity_exit_1():
    code, out, _ = run_capture(["verify", "--identity", "pq-8", "--set", "n=0:3"])
    assert code == 1 and "x^2*p*q + y" in out
    code, out, _ = run_capture(["verify", "--identity", "thm4.1", "--set", "n=4:3"])
    assert code == 1 and "vacuous: 0 instances" in out


def test_verify_usage_errors():
    assert run_capture(["verify", "--identity", "nope"])[0] == 2
    assert run_capture(["verify", "--all", "--set", "n=1:2"])[0] == 2
    assert run_capture(["verify"])[0] == 2
    assert run_capture(["verify", "--list"])[0] == 0


def test_deterministic_output_is_byte_identical():
    argv = ["verify", "--identity", "thm4.6-carlitz-binom", "--format", "json", "--deterministic"]
    assert run_capture(argv) == run_capture(argv)
    assert "elapsed" not in run_capture(argv)[1]


def test_seed_ignored_by_paper_facing_verbs():
    a = run_capture(["poly", "--family", "FK", "--n", "6", "--seed", "1"])
    b = run_capture(["poly", "--family", "FK", "--n", "6", "--seed", "99"])
    assert a == b


def test_help_and_unknown_verb():
    assert run_capture(["--help"])[0] == 0
    assert run_capture(["frobnicate"])[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qfibstat", "poly", "--family", "F", "--n", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "q^3 + q^2 + q\n"
