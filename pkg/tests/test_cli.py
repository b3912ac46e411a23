import json

import pytest
from click.testing import CliRunner

from conftest import poly
from typea_cluster.cli import main
from typea_cluster.geometry import triangulation_from_json, triangulation_from_orientation
from typea_cluster.laurent import LaurentPoly


@pytest.fixture
def run():
    runner = CliRunner()

    def go(*args, input=None):
        return runner.invoke(main, list(args), input=input)
    return go


FAN_13 = "x1*x2*x4*x8 + x1*x4*x7*x9 + x2*x3*x5*x9 + x3*x4*x6*x9"


@pytest.mark.parametrize("method", ["angles", "discrete", "cuts", "snake", "oracle"])
def test_expand_fan(run, method):
    res = run("expand", "--orientation", "FF", "--interval", "1,3", "--method", method)
    assert res.exit_code == 0
    assert res.output.strip() == FAN_13


def test_expand_rank_one(run):
    res = run("expand", "--n", "1", "--interval", "1,1", "--method", "oracle")
    assert res.exit_code == 0
    assert len(res.output.split("+")) == 2


def test_expand_pentagon_cuts(run):
    res = run("expand", "--orientation", "F", "--interval", "1,2", "--method", "cuts")
    assert res.exit_code == 0
    oracle = run("expand", "--orientation", "F", "--interval", "1,2", "--method", "oracle")
    assert res.output == oracle.output
    assert len(res.output.split("+")) == 3


def test_expand_json(run):
    res = run("expand", "--orientation", "FF", "--interval", "1,2", "--json")
    p = LaurentPoly.from_json(json.loads(res.output))
    assert p == poly("x1*x4*x7 + x3*x4*x6 + x2*x3*x5", 9)


def test_expand_from_stdin(run):
    doc = json.dumps({"n": 3, "orientation": "FF"})
    res = run("expand", "--input", "-", "--interval", "1,3", input=doc)
    assert res.output.strip() == FAN_13


@pytest.mark.parametrize("args", [
    ("expand", "--orientation", "FF", "--interval", "0,2"),
    ("expand", "--orientation", "FF", "--interval", "3,1"),
    ("expand", "--orientation", "FF", "--interval", "x"),
    ("expand", "--orientation", "FF", "--n", "4", "--interval", "1,1"),
    ("expand", "--interval", "1,1"),
    ("export", "--orientation", "FF", "--what", "triangulation", "--format", "dot"),
])
def test_input_errors(run, args):
    assert run(*args).exit_code == 2


def test_bad_orientation_letters(run):
    res = run("expand", "--orientation", "FX", "--interval", "1,1")
    assert res.exit_code == 2


def test_corrupted_json(run):
    res = run("verify", "--input", "-", input="{not json")
    assert res.exit_code == 2
    res = run("verify", "--input", "-", input=json.dumps({"n": 3, "diagonals": []}))
    assert res.exit_code == 2


def test_seed_limit_is_input_error(run):
    res = run("expand", "--orientation", "FF", "--interval", "1,1", "--method", "oracle",
              "--seed-limit", "3")
    assert res.exit_code == 2


def test_verify_fan(run):
    res = run("verify", "--orientation", "FF")
    assert res.exit_code == 0
    lines = [line for line in res.output.splitlines() if line.startswith("FF [")]
    assert len(lines) == 6
    counts = {line.split()[1]: int(line.split("matchings=")[1].split()[0]) for line in lines}
    assert counts == {"[1,1]": 2, "[1,2]": 3, "[1,3]": 4, "[2,2]": 2, "[2,3]": 3, "[3,3]": 2}


def test_verify_json(run):
    res = run("verify", "--orientation", "B", "--json")
    doc = json.loads(res.output.splitlines()[0])
    assert doc["ok"] and len(doc["intervals"]) == 3


def test_verify_is_deterministic(run):
    a = run("verify", "--all", "--max-n", "3")
    b = run("verify", "--all", "--max-n", "3")
    assert a.exit_code == 0 and a.output == b.output


def test_verify_reports_failures(run, monkeypatch):
    import typea_cluster.verify as v

    real = v.ms_formula
    monkeypatch.setattr(v, "ms_formula", lambda T, i, j, m: real(T, i, j, m) * 2)
    res = run("verify", "--orientation", "F")
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_internal_error_exit_code(run, monkeypatch):
    import typea_cluster.cli as cli
    from typea_cluster.errors import NotDivisible

    def boom(*a, **k):
        raise NotDivisible("forced")
    monkeypatch.setattr(cli, "angle_formula", boom)
    assert run("expand", "--n", "2", "--interval", "1,1").exit_code == 3


def test_export_ice_dot(run):
    res = run("export", "--orientation", "FF", "--what", "ice", "--format", "dot")
    assert res.exit_code == 0
    body = res.output.splitlines()
    assert sum(1 for line in body if line.strip().endswith(";") and "->" not in line) == 9
    assert sum(1 for line in body if "->" in line) == 10
    assert sum(1 for line in body if "shape=box" in line) == 6


def test_export_snake_json(run):
    res = run("export", "--orientation", "FF", "--what", "snake", "--interval", "1,2")
    doc = json.loads(res.output)
    assert len(doc["vertices"]) == 6
    kinds = [e["kind"] for e in doc["edges"]]
    assert kinds.count("boundary") == 7 and kinds.count("diagonal") == 2


def test_export_qp_dot_dashes_external(run):
    res = run("export", "--orientation", "FF", "--what", "qp", "--format", "dot")
    assert sum(1 for line in res.output.splitlines() if "dashed" in line) == 4


def test_export_qp_json(run):
    doc = json.loads(run("export", "--orientation", "FF", "--what", "qp").output)
    assert len(doc["arrows"]) == 16
    assert sorted(c["sign"] for c in doc["potential"]) == [-1] * 4 + [1] * 4


def test_export_quiver(run):
    doc = json.loads(run("export", "--orientation", "FB", "--what", "quiver").output)
    assert doc["vertices"] == [1, 2, 3] and len(doc["arrows"]) == 2


@pytest.mark.parametrize("ori", ["-", "F", "BF", "FBB"])
def test_export_triangulation_roundtrip(run, ori):
    res = run("export", "--orientation", ori, "--what", "triangulation")
    n = 1 if ori == "-" else len(ori) + 1
    T = triangulation_from_orientation(n, "" if ori == "-" else ori)
    assert triangulation_from_json(json.loads(res.output)) == T


def test_export_reads_stdin_by_default(run):
    res = run("export", "--what", "triangulation", input=json.dumps({"n": 2, "orientation": "B"}))
    assert res.exit_code == 0


def test_module_entry_point():
    import subprocess
    import sys

    out = subprocess.run([sys.executable, "-m", "typea_cluster", "expand", "--orientation", "FF",
                          "--interval", "1,3"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == FAN_13
