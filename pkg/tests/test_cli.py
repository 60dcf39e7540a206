import json
import subprocess
import sys
from pathlib import Path

import pytest

from exls.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("alg,a,b,expected", [
    ("e510", "d12", "d34", "D5"),
    ("k16", "xi2", "eta2", "-1"),
    ("e44", "dx1", "dx1", "0"),
])
def test_bracket(capsys, alg, a, b, expected):
    code, out, _ = run(capsys, "bracket", alg, a, b)
    assert code == 0
    assert out.strip() == expected


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "bracket", "e510", "d12+", "d3")
    assert code == 2
    assert "position 4" in err


def test_iota_and_A(capsys):
    assert run(capsys, "iota", "xi2*xi3*eta4")[1].strip() == "2*xi2*xi3*eta4"
    assert run(capsys, "A", "t^2*xi2*xi3*xi4*eta2", "--window", "4")[1].strip() == "-1/3*t^3*xi3*xi4"
    code, _, err = run(capsys, "A", "t^4*xi2*xi3*xi4*eta2", "--window", "4")
    assert code == 2 and "t-window" in err


@pytest.mark.parametrize("name", ["iota", "Psi"])
def test_table_golden(capsys, name):
    code, out, _ = run(capsys, "table", name)
    assert code == 0
    assert out == (GOLDEN / f"{name}.md").read_text()


def test_table_json_matches_md(capsys):
    _, md, _ = run(capsys, "table", "Psi")
    _, js, _ = run(capsys, "table", "Psi", "--format", "json")
    rows = json.loads(js)["rows"]
    md_rows = [[c.strip() for c in line.strip("|").split("|")] for line in md.splitlines()[2:]]
    assert md_rows == [[r["family"], r["ijk"], r["f"], r["iota"], r["Psi"]] for r in rows]


def test_verify_human_and_exit(capsys):
    code, out, _ = run(capsys, "verify", "diesis")
    assert code == 0
    assert out.startswith("diesis: PASS 64/64")


def test_verify_json_deterministic(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "verify", "jacobi-k16", "--trials", "50", "--seed", "7", "--json")
        assert code == 0
        d = json.loads(out)
        d.pop("wall_time")
        outs.append(d)
    assert outs[0] == outs[1]
    assert outs[0]["params"] == {"seed": 7, "trials": 50}


@pytest.mark.parametrize("argv", [
    ["verify", "no-such-suite"],
    ["verify", "Psi", "--n", "3..1"],
    ["verify", "psi", "--twindow", "0"],
    ["verify", "dint", "--seed", "-1"],
    ["table", "other"],
    ["decompose", "--r", "2", "--kmax", "20", "--x1max", "1"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "--r", "1", "--kmax", "1", "--json")
    assert code == 0
    d = json.loads(out)
    assert [(s["k"], s["dim"]) for s in d["slices"]] == [(0, 4), (1, 20)]


def test_console_script_runs():
    res = subprocess.run([sys.executable, "-m", "exls.cli", "bracket", "e510", "d12", "d34"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "D5"
