from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from gla.cli import run
from gla.fixtures import FIXTURE_DIR
from gla.io import load_cs, load_derivation, load_model, verdict_to_json
from gla.calculus import check_derivation

FX = str(FIXTURE_DIR)


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_prop1(capsys):
    code, out, _ = call(capsys, "check", "--cs", f"{FX}/cs.json", f"{FX}/prop1.json")
    assert code == 0 and "t:[]P -> P" in out


def test_check_reports_failure(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"hypotheses": ["P"], "steps": [
        {"formula": "P", "rule": "Hyp", "from": [1]},
        {"formula": "[]P", "rule": "Nec", "from": [1]},
    ]}))
    code, out, _ = call(capsys, "--json", "check", str(bad))
    assert code == 1 and json.loads(out)["line"] == 2


def test_model_check_ier(capsys):
    code, out, _ = call(capsys, "--json", "model-check", "--model", f"{FX}/ier_model.json",
                        "--formula", "[]x:P -> P", "--mode", "all")
    data = json.loads(out)
    assert code == 1
    assert data["failing_worlds"] == ["2"] and data["forces"] == {"1": True, "2": False}
    assert data["valid"] and data["soundness"]["f_sound"]


def test_model_check_root_mode(capsys):
    code, _, _ = call(capsys, "model-check", "--model", f"{FX}/ier_model.json",
                      "--formula", "[]x:P -> P", "--mode", "root")
    assert code == 0


def test_model_check_invalid_frame(capsys, tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"worlds": ["1", "2"], "root": "1", "rel": [["1", "2"], ["2", "1"]]}))
    code, _, _ = call(capsys, "model-check", "--model", str(m), "--formula", "P")
    assert code == 1


def test_decide_gl_fast_path(capsys):
    code, out, _ = call(capsys, "decide", "[]([]P->P) -> []P", "--cs", "empty.json")
    assert code == 0 and "gl-tableau" in out


def test_decide_non_theorem_writes_model(capsys, tmp_path):
    out_path = tmp_path / "m.json"
    code, out, _ = call(capsys, "--json", "decide", "[]x:P -> P", "--out", str(out_path))
    assert code == 1
    data = json.loads(out)
    assert data["verdict"] == "non-theorem" and data["failing_world"] == "2"
    assert load_model(out_path).worlds == ("1", "2")


def test_decide_unknown(capsys):
    code, out, _ = call(capsys, "decide", "[]P -> P", "--max-worlds", "1", "--depth", "1")
    assert code == 3 and "max_worlds" in out


def test_decide_flags(capsys):
    code, _, _ = call(capsys, "decide", "[]false -> false", "--mode", "root", "--max-worlds", "2",
                      "--max-seed", "2", "--budget", "5")
    assert code == 3


def test_decide_gl_command(capsys):
    assert call(capsys, "decide-gl", "[]P -> P")[0] == 1
    assert call(capsys, "decide-gl", "[]P -> [][]P")[0] == 0
    assert call(capsys, "decide-gl", "t:P")[0] == 2


def test_parse(capsys):
    code, out, _ = call(capsys, "parse", "x:P->Q")
    assert code == 0 and out.strip() == "x:P -> Q"
    code, out, _ = call(capsys, "--json", "parse", "--term", "a*!x")
    assert json.loads(out) == {"term": "a*!x"}
    code, _, err = call(capsys, "parse", "(P")
    assert code == 2 and "position" in err


def test_lift_round_trip(capsys, tmp_path):
    out_path = tmp_path / "lift.json"
    code, _, _ = call(capsys, "lift", "--cs", f"{FX}/empty.json",
                      f"{FX}/positive_introspection.json", "--out", str(out_path))
    assert code == 0
    data = json.loads(out_path.read_text())
    assert set(data) == {"term", "cs", "witness"}
    d, cs = load_derivation(out_path), load_cs(out_path)
    assert check_derivation(d, cs).ok
    assert call(capsys, "check", "--cs", str(out_path), str(out_path))[0] == 0


def test_conjoin(capsys, tmp_path):
    out_path = tmp_path / "n.json"
    code, _, _ = call(capsys, "conjoin", f"{FX}/positive_introspection.json",
                      f"{FX}/stability.json", "--out", str(out_path))
    assert code == 0
    n = load_derivation(out_path)
    assert check_derivation(n).ok and len(n.steps) == 7 + 61


def test_usage_and_file_errors(capsys):
    assert call(capsys)[0] == 2
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "check", "/nonexistent/d.json")[0] == 2
    assert call(capsys, "decide", "P", "--max-worlds", "0")[0] == 2


def test_inputs_not_mutated(capsys, tmp_path):
    before = {p.name: p.read_bytes() for p in Path(FX).glob("*.json")}
    call(capsys, "lift", f"{FX}/stability.json", "--out", str(tmp_path / "x.json"))
    call(capsys, "check", f"{FX}/stability.json")
    assert before == {p.name: p.read_bytes() for p in Path(FX).glob("*.json")}


def test_verdict_json_round_trip():
    from gla.decide import decide
    from gla.io import model_from_json
    from gla.syntax import parse_formula
    v = decide(parse_formula("[]x:P -> P"))
    data = json.loads(json.dumps(verdict_to_json(v)))
    assert model_from_json(data["model"]) == v.model


@pytest.mark.parametrize("argv, code", [
    (["check", "--cs", "fixtures/cs.json", "fixtures/prop1.json"], 0),
    (["model-check", "--model", "fixtures/ier_model.json", "--formula", "[]x:P -> P"], 1),
])
def test_console_script(argv, code):
    root = Path(__file__).resolve().parents[1]
    proc = subprocess.run([sys.executable, "-m", "gla.cli", *argv], cwd=root,
                          capture_output=True, text=True)
    assert proc.returncode == code, proc.stderr
