import io
import json
import subprocess
import sys

import pytest

from ospcentre.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def test_compute_phi_json():
    code, out = call("compute", "phi", "--M", "1", "--n", "1", "--m", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert (data["M"], data["n"], data["m"]) == (1, 1, 2)
    assert data["terms"] and data["expansion"] == [{"lambda": [1, 1], "c": 1, "Y": "1"}]


def test_compute_phi_rational_singular():
    code, out = call("compute", "phi", "--M", "0", "--n", "1", "--rational", "--format", "json")
    assert code == 0
    assert json.loads(out)["status"] == "skipped: singular parameters"


def test_compute_brauer_and_psi():
    code, out = call("compute", "brauer", "--m", "2")
    assert code == 0 and out.startswith("s^(2) = ")
    code, out = call("compute", "psi", "--M", "3", "--n", "0", "--format", "json")
    assert code == 0 and json.loads(out)["k"] == 2


def test_verify_annihilation():
    code, out = call("verify", "annihilation", "--M", "1", "--n", "1", "--m", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"campaign", "params", "checks", "timing_ms"}
    assert data["checks"] and all(c["status"] == "pass" for c in data["checks"])


def test_verify_failure_exit_code():
    code, out = call("verify", "annihilation", "--M", "1", "--n", "1", "--modes", "1", "--level", "0")
    assert code == 1
    assert "[fail]" in out


def test_verify_brauer_small():
    code, out = call("verify", "brauer", "--m", "2")
    assert code == 0 and "0 failed" in out


@pytest.mark.parametrize("target,extra", [
    ("phi", ["--m", "3"]),
    ("commutativity", []),
    ("psi", ["--M", "3", "--n", "0"]),
    ("centrality", ["--z", "2"]),
    ("rep", ["--m", "2", "--instances", "1"]),
])
def test_verify_targets(target, extra):
    code, out = call("verify", target, *extra)
    assert code == 0, out


@pytest.mark.parametrize("argv", [
    ["compute", "annihilation"],
    ["verify", "bogus"],
    ["verify", "annihilation", "--m", "1"],
    ["verify", "brauer", "--m", "5"],
    ["verify", "phi", "--M", "0", "--n", "0"],
    ["verify", "annihilation", "--modes", "x"],
    ["verify", "centrality", "--z", "0"],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_json_is_byte_identical():
    argv = ["verify", "rep", "--m", "2", "--instances", "2", "--seed", "3", "--format", "json", "--no-timing"]
    assert call(*argv)[1] == call(*argv)[1]
    argv = ["compute", "phi", "--m", "3", "--format", "json"]
    assert call(*argv)[1] == call(*argv)[1]


def test_text_and_json_statuses_agree():
    argv = ["verify", "psi", "--M", "2", "--n", "1"]
    code, text = call(*argv)
    _, js = call(*argv, "--format", "json")
    data = json.loads(js)
    for c in data["checks"]:
        assert f"[{c['status']}] {c['name']}" in text
    assert code == 0 and any(c["status"] == "skipped" for c in data["checks"])


def test_out_file(tmp_path):
    target = tmp_path / "phi.json"
    code, out = call("compute", "phi", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["m"] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ospcentre", "verify", "commutativity", "--M", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    proc = subprocess.run([sys.executable, "-m", "ospcentre", "verify"], capture_output=True, text=True)
    assert proc.returncode == 2
