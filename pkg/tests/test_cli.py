import json

import pytest

from sp4whittaker.cli import run
from sp4whittaker.report import dumps


def _capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def test_classify_output(capsys):
    code, out = _capture(capsys, ["classify", "--lambda", "2,-1"])
    assert code == 0
    assert json.loads(out) == {"xi_type": "II", "blattner": [3, -1], "d": 4}


def test_blattner_output(capsys):
    code, out = _capture(capsys, ["blattner", "--lambda", "1,-3"])
    assert code == 0
    assert json.loads(out) == {"blattner": [1, -4], "d": 5}


def test_domain_error_exit_code(capsys):
    code = run(["classify", "--lambda", "2,2"])
    assert code == 1
    assert "singular" in capsys.readouterr().err


def test_usage_error_exit_code():
    assert run(["unknown-subcommand"]) == 2
    assert run([]) == 2


def test_table_cuspidal_weights(capsys):
    code, out = _capture(capsys, ["table", "cuspidal", "--parabolic", "siegel",
                                  "--lambda", "2,-1"])
    assert code == 0
    payload = json.loads(out)
    assert [c["weight"] for c in payload["verdict"]] == [2, 4]


def test_table_embeddings(capsys):
    code, out = _capture(capsys, ["table", "embeddings", "--lambda", "2,-1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["siegel_targets"] == [{"exponent": "3/2", "weight": 2},
                                         {"exponent": "1/2", "weight": 4}]
    patterns = {e["pattern"]: e for e in payload["principal_patterns"]}
    assert patterns[4]["condition"] == "never"
    assert len(payload["convergence"]) == 6


def test_eval_borel_csv(capsys):
    code, out = _capture(capsys, ["--format", "csv", "eval", "borel",
                                  "--lambda", "2,-1", "--family", "f1",
                                  "--grid", "1:1"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "a1,a2,i,value"
    assert len(lines) == 6
    assert lines[1].split(",") == ["1", "1", "0", "1"]


def test_eval_siegel_values(capsys):
    code, out = _capture(capsys, ["eval", "siegel", "--lambda", "2,-1",
                                  "--c0", "1", "--grid", "1:1", "--const", "1,0"])
    assert code == 0
    payload = json.loads(out)
    vals = {row["i"]: row["value"] for row in payload["values"]}
    assert vals[0] == 0.0
    assert abs(vals[3] - 0.0234669774677338967) < 1e-12


def test_eval_fj(capsys):
    code, out = _capture(capsys, ["eval", "fj", "--lambda", "3,-1",
                                  "--pi1", "+:2", "--a", "1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["power"] == 5
    assert [t["value"] for t in payload["values"]] == [1.0, -2.0]


def test_solve_borel(capsys):
    code, out = _capture(capsys, ["solve", "borel", "--lambda", "2,-1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["dimension"] == 5
    st = {e["family"]: e["status"]
          for e in payload["printed_table_comparison"]["families"]}
    assert st["f0"] == st["f1"] == st["f2"] == "MATCH"


def test_verify_rules_exit_zero(capsys):
    code, out = _capture(capsys, ["verify", "rules"])
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["FAIL"] == 0


def test_json_byte_determinism(capsys):
    a = _capture(capsys, ["table", "embeddings", "--lambda", "3,-2"])
    b = _capture(capsys, ["table", "embeddings", "--lambda", "3,-2"])
    assert a == b
    c = _capture(capsys, ["solve", "borel", "--lambda", "3,-2"])
    d = _capture(capsys, ["solve", "borel", "--lambda", "3,-2"])
    assert c == d


def test_float_formatting_17_digits():
    assert dumps(0.1) == "0.10000000000000001"
    assert dumps(1.0) == "1.0"
    assert dumps({"b": 2, "a": 1}) == '{"a":1,"b":2}'
