import json
import subprocess
import sys

import pytest

from airyherm.cli import UsageError, parse_grid, parse_values, run
from airyherm.suites import SUITES


def test_parse_values():
    assert parse_values("-2:2:0.5") == [-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0]
    assert parse_values("0.25,0.5,1") == [0.25, 0.5, 1.0]
    with pytest.raises(UsageError):
        parse_values("1:0:0.5")


def test_parse_grid():
    g = parse_grid("t=1,2;x=0:1:0.5")
    assert g == {"t": [1.0, 2.0], "x": [0.0, 0.5, 1.0]}
    with pytest.raises(UsageError):
        parse_grid("y=1")


def test_eval_airy_prints_ten_digits(capsys):
    assert run(["eval", "airy", "--x", "0"]) == 0
    assert capsys.readouterr().out.strip() == "0.3550280539"


@pytest.mark.parametrize("grid,lines", [("x=0", 2), ("t=1,2,4;x=-1:1:1", 10)])
def test_csv_line_counts(tmp_path, grid, lines):
    out = tmp_path / "k.csv"
    assert run(["eval", "kernel", "--grid", grid, "--csv", str(out)]) == 0
    text = out.read_text().splitlines()
    assert len(text) == lines
    assert text[0] == "t,x,value"


def test_csv_row_major_and_round_trip(tmp_path):
    out = tmp_path / "k.csv"
    run(["eval", "kernel", "--m", "4", "--grid", "t=1,2;x=0,0.5", "--csv", str(out)])
    rows = [r.split(",") for r in out.read_text().splitlines()[1:]]
    assert [(r[0], r[1]) for r in rows] == [("1", "0"), ("1", "0.5"), ("2", "0"), ("2", "0.5")]
    v = float(rows[0][2])
    assert format(v, ".17g") == rows[0][2]


def test_unwritable_csv(tmp_path, capsys):
    assert run(["eval", "airy", "--x", "0", "--csv", str(tmp_path / "no" / "a.csv")]) == 1
    assert "cannot write" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["verify", "nonsense"],
    ["eval", "airy", "--x", "12"],
    ["eval", "airy"],
    ["verify", "lacunary", "--order", "0"],
    ["--quad-tol", "-1", "verify", "eq10"],
    [],
])
def test_usage_errors(argv):
    assert run(argv) == 2


@pytest.mark.parametrize("suite", ["lacunary", "gould-hopper", "omega", "cube", "eq10", "scaling"])
def test_verify_passes(suite):
    assert run(["verify", suite]) == 0


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_impossible_tolerance_fails(suite, capsys, monkeypatch):
    # small sizes keep this fast; the contract is about the exit code
    argv = ["--tol-override", "-1", "verify", suite]
    if suite == "lacunary":
        argv += ["--order", "2", "--points", "7"]
    assert run(argv) == 1
    err = capsys.readouterr().err
    assert err.startswith("FAIL ")


def test_json_report_schema(tmp_path):
    out = tmp_path / "r.json"
    assert run(["verify", "eq10", "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["suite"] == "eq10"
    assert data["summary"] == {"failed": 0, "passed": 12, "total": 12}
    names = [c["name"] for c in data["cases"]]
    assert names == sorted(names)
    assert set(data["cases"][0]) == {"metric", "name", "params", "pass", "tol"}


def test_duality_scan_output(capsys):
    assert run(["duality", "scan", "--m", "4", "--tau", "50", "--jmax", "8"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1] == "j,partial_sum,absolute_error"
    assert out[-2].startswith("best j=8")


def test_env_var_reaches_cli(monkeypatch, capsys):
    monkeypatch.setenv("AIRYHERM_QUAD_TOL", "0")
    assert run(["eval", "airy", "--x", "0"]) == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "airyherm", "eval", "airy", "--x", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.strip() == "0.1352924163"
