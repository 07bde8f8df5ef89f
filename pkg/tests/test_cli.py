from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest
from numpy.testing import assert_allclose

from multivalent.cli import main

I1 = json.dumps({"family": "I", "p": 1, "params": {"r": 1, "lambda": 0}})
H1 = json.dumps({"family": "H", "p": 1, "params": {"alphas": [1, 2.5], "betas": [2.5]}})


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_apply(capsys):
    code, out, _ = run(capsys, "apply", "--op", I1, "--series", '{"p": 1, "coeffs": [1, 1, 1]}')
    assert code == 0
    assert json.loads(out)["coeffs"] == [[1.0, 0.0], [2.0, 0.0], [3.0, 0.0]]


def test_series_from_file(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text('{"p": 1, "coeffs": [1, 0.5]}')
    code, out, _ = run(capsys, "bernardi", "--series", str(path), "--alpha", "1")
    assert code == 0
    assert_allclose([c[0] for c in json.loads(out)["coeffs"]], [1, 0.25])


def test_out_file(tmp_path, capsys):
    target = tmp_path / "o.json"
    code, out, _ = run(capsys, "omega", "--op", H1, "--series", '{"p":1,"coeffs":[1,0.2]}', "--mu", "1", "--nu", "1", "--out", str(target))
    assert code == 0 and out == ""
    # identity chain: Omega = z f'/f = (1 + 0.4 z)/(1 + 0.2 z)
    coeffs = json.loads(target.read_text())["coeffs"]
    assert coeffs[0] == [1.0, 0.0] and coeffs[1][0] == pytest.approx(0.2)


def test_phi_and_psi(capsys):
    f = '{"p":1,"coeffs":[1,0.1,0.05]}'
    assert run(capsys, "phi", "--op", H1, "--series", f, "--mu", "1", "--nu", "1")[0] == 0
    code, out, _ = run(capsys, "psi", "--op", I1, "--series", f, "--mu", "1", "--nu", "0", "--variant", "identity_consistent")
    assert code == 0 and json.loads(out)["p"] == 0


def test_chi(capsys):
    code, out, _ = run(capsys, "chi", "--dominant", '{"kind": "sqrt_shift"}', "--op", H1, "--mu", "1", "--nu", "1", "--N", "8")
    assert code == 0
    coeffs = json.loads(out)["coeffs"]
    assert len(coeffs) == 9 and coeffs[0][0] == pytest.approx(0.5)


def test_check_class_exit_codes(capsys):
    koebe = json.dumps({"p": 1, "coeffs": list(range(1, 513))})
    assert run(capsys, "check-class", "--series", koebe, "--class", "S*")[0] == 0
    code, out, _ = run(capsys, "check-class", "--series", koebe, "--class", "S*", "--alpha", "0.6")
    assert code == 1 and json.loads(out)["holds"] is False


def test_subordinate(capsys):
    code, out, _ = run(
        capsys, "subordinate", "--series", '{"p":0,"coeffs":[1,0.5]}', "--region", '{"kind":"disk","center":1,"radius":1}',
        "--radii", "0.5,0.9", "--angles", "32",
    )
    assert code == 0 and json.loads(out)["samples"] == 64


def test_malformed_json(capsys):
    code, _, err = run(capsys, "apply", "--op", "{not json", "--series", '{"p":1,"coeffs":[1]}')
    assert code == 2 and "malformed" in err


def test_missing_file(capsys):
    assert run(capsys, "apply", "--op", "/nonexistent.json", "--series", "[1]")[0] == 2


def test_invalid_parameter(capsys):
    op = json.dumps({"family": "I", "p": 1, "params": {"r": 1, "lambda": -1}})
    assert run(capsys, "apply", "--op", op, "--series", '{"p":1,"coeffs":[1]}')[0] == 2


def test_numerical_error(capsys):
    code, _, err = run(capsys, "omega", "--op", H1, "--series", '{"p":1,"coeffs":[2,1]}', "--mu", "1", "--nu", "1")
    assert code == 3 and "numerical" in err


def test_argparse_usage():
    with pytest.raises(SystemExit) as exc:
        main(["apply", "--N", "4", "--op", I1, "--series", "[1]"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_unknown_verify_target(capsys):
    assert run(capsys, "verify", "bogus")[0] == 2


def test_boundary_csv(capsys):
    code, out, _ = run(capsys, "boundary", "--region", '{"kind":"half_plane","alpha":0.5}', "--n", "3")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["theta", "u", "v"] and len(rows) == 4
    assert rows[2] == ["0.0", "0.5", "0.0"]
    # repr floats round-trip exactly
    assert float(rows[1][0]) == -float(rows[3][0])


def test_boundary_json(capsys):
    code, out, _ = run(capsys, "boundary", "--region", '{"kind":"sector","eta":0.5}', "--n", "4", "--format", "json")
    assert code == 0 and len(json.loads(out)["points"]) == 4


def test_constants(capsys):
    code, out, _ = run(capsys, "constants", "--pretty")
    assert code == 0 and json.loads(out)["pass"] is True


def test_verify_q_discrepancy(capsys):
    code, out, _ = run(capsys, "verify", "q-discrepancy")
    assert code == 0 and json.loads(out)["id"] == "q_discrepancy"


def test_verify_seed_env(monkeypatch, capsys):
    args = ("verify", "u1", "--trials", "2", "--radii", "0.5", "--angles", "32")
    monkeypatch.setenv("GFT_SEED", "11")
    _, out, _ = run(capsys, *args)
    assert json.loads(out)["config_echo"]["seed"] == 11
    monkeypatch.setenv("GFT_SEED", "x")
    assert run(capsys, *args)[0] == 2


def test_verify_byte_identical(tmp_path):
    cmd = [sys.executable, "-m", "multivalent", "verify", "ex1.2", "--trials", "5", "--radii", "0.3,0.7", "--angles", "64"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["pass"] is True
