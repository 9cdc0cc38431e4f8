import json
import subprocess
import sys

import pytest

from unimodular.cli import example_items, main
from unimodular.oracle import ModuleSpan

LISTED_BASIS = [(-1, 3, 0, 0), (0, -1, 2, 0), (-1, 1, 1, 2)]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", "12", "4", "2", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["coefficients"] == ["12", "4", "2", "3"]
    basis = [tuple(int(x) for x in z) for z in doc["basis"]]
    assert ModuleSpan(basis, 4) == ModuleSpan(LISTED_BASIS, 4)
    assert abs(int(doc["det"])) == abs(int(doc["coefficients"][int(doc["pivot"]) - 1]))
    assert all(ch["pass"] for ch in doc["checks"])
    assert {"paper_ref", "name", "pass"} <= set(doc["checks"][0])
    for key in ("quotients", "presentation"):
        assert key in doc
    assert {"d", "e", "relation_matrix", "snf_diagonal"} <= set(doc["presentation"])


def test_solve_text_and_pivot(capsys):
    code, out, _ = run(capsys, "solve", "12", "4", "2", "3", "--pivot", "1")
    assert code == 0
    assert "det = " in out and "pivot = 1" in out


def test_structure(capsys):
    code, out, _ = run(capsys, "structure", "12", "4", "2", "3", "--i", "1")
    assert code == 0
    assert "W/S   = Z/12" in out
    assert "S/S_1 = Z/12 + Z/12" in out
    assert "S/U_1 = Z/6" in out
    code, out, _ = run(capsys, "structure", "12", "4", "2", "3", "--i", "1", "--format", "json")
    q = json.loads(out)["quotients"]
    assert q["S_mod_Ui"]["elementary_divisors"] == {"2": ["2"], "3": ["3"]}
    assert q["S_mod_Si"]["invariant_factors"] == ["12", "12"]
    assert q["W_mod_S"]["invariant_factors"] == ["12"]


def test_present(capsys):
    code, out, _ = run(capsys, "present", "12", "4", "2", "3", "--format", "json")
    assert code == 0
    pr = json.loads(out)["presentation"]
    assert (pr["d"], pr["e"]) == ("5", "2")
    assert pr["snf_diagonal"] == ["1", "1"]


@pytest.mark.parametrize("argv", [
    ("solve", "2", "4", "6"),
    ("solve", "7"),
    ("solve", "1", "x"),
    ("structure", "0", "1", "--pivot", "1"),
])
def test_bad_input_exits_nonzero(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_not_unimodular_message(capsys):
    _, _, err = run(capsys, "solve", "2", "4", "6")
    assert "NotUnimodular" in err


def test_file_input(capsys, tmp_path):
    f = tmp_path / "coeffs.txt"
    f.write_text("# equation\n12\n4  # second\n\n2\n3\n")
    code, out, _ = run(capsys, "solve", "--file", str(f), "--format", "json")
    assert code == 0
    assert json.loads(out)["coefficients"] == ["12", "4", "2", "3"]


def test_verify_and_replay(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--count", "15", "--seed", "3", "--max-n", "5",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["seed"] == "3"
    assert len(doc["instances"]) == 15
    report = tmp_path / "report.json"
    report.write_text(out)
    code, out, _ = run(capsys, "verify", "--replay", str(report))
    assert code == 0 and "identical" in out


def test_replay_detects_tampering(capsys, tmp_path):
    _, out, _ = run(capsys, "verify", "12", "4", "2", "3", "--format", "json")
    doc = json.loads(out)
    doc["instances"][0]["checks"][0]["pass"] = False
    report = tmp_path / "report.json"
    report.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--replay", str(report))
    assert code == 1 and "mismatch" in out


def test_verify_is_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "--count", "5", "--seed", "11", "--format", "json")
    _, b, _ = run(capsys, "verify", "--count", "5", "--seed", "11", "--format", "json")
    assert a == b


def test_example(capsys):
    code, out, _ = run(capsys, "example")
    assert code == 0
    assert "MISMATCH" not in out
    assert all(exp == got for _, exp, got in example_items())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "unimodular", "solve", "2", "4", "6"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run([sys.executable, "-m", "unimodular", "structure", "12", "4", "2", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "Z/12" in proc.stdout
