import io
import json
import subprocess
import sys

import pytest

from thetalift.cli import main
from thetalift.core import fmt_param, infchar_to_json, param_from_json
from thetalift.ktypes import infinitesimal_character, ktype_to_json, lowest_ktypes
from thetalift.lifts import theta
from thetalift.occurrence import occurrence_grid
from thetalift.ostar_dual import OStar2Rep, make, rep_from_json

D51 = '{"family":"D","l1":"5","l2":"1"}'


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_lift_examples():
    code, out, _ = run("lift", "--pair", "sp:2,2", "--rep", '{"family":"D","l1":"5","l2":"0"}')
    doc = json.loads(out)
    assert code == 0 and doc["pretty"] == "π(1,(5;1),Psi3,2,2)"
    assert doc["trace"] == ["formula:D@(2,2):l2=0"]
    assert doc["infchar"] == ["5", "1", "2", "0"]
    code, out, _ = run("lift", "--pair", "sp:0,0", "--rep", '{"family":"F","l1":"1","l2":"0"}')
    assert json.loads(out)["pretty"] == "π(0,∅)"


def test_lift_by_character_and_zero():
    _, out, _ = run("lift", "--pair", "sp:1,1", "--chi", "0")
    assert json.loads(out)["pretty"] == "π(1,∅,Psi1,1,1)"
    _, out, _ = run("lift", "--pair", "sp:1,1", "--rep", '{"family":"D","l1":"2","l2":"1"}')
    doc = json.loads(out)
    assert doc["result"] == "zero" and doc["infchar"] is None


@pytest.mark.parametrize("rep,pair", [(D51, "sp:3,2"), ('{"k": -3}', "sp:2,1"),
                                      ('{"family":"P","l1":"3/2+1/2i","l2":"1/2+1/2i"}', "sp:3,1")])
def test_lift_json_round_trips(rep, pair):
    _, out, _ = run("lift", "--pair", pair, "--rep", rep)
    doc = json.loads(out)
    param = param_from_json(doc["result"])
    p, q = (int(x) for x in pair[3:].split(","))
    assert param == theta(rep_from_json(json.loads(rep)), p, q).value
    assert fmt_param(param) == doc["pretty"]


def test_picture_example():
    code, out, _ = run("picture", "--chi", "0", "--max", "5")
    assert code == 0
    rows = {int(line.split("|")[0]): line.split("|")[1].split()
            for line in out.splitlines() if "|" in line}
    for q in range(6):
        for p in range(6):
            want = (p, q) == (0, 0) or min(p, q) >= 1
            assert (rows[q][p] == "#") == want, (p, q)


@pytest.mark.parametrize("args", [["--chi", "3"], ["--rep", D51],
                                  ["--rep", '{"family":"F","l1":"2","l2":"0"}']])
def test_picture_and_occurrence_agree(args):
    _, grid_out, _ = run("occurrence", *args, "--max", "6")
    _, pic, _ = run("picture", *args, "--max", "6")
    grid = json.loads(grid_out)["grid"]
    rows = {int(line.split("|")[0]): line.split("|")[1].split()
            for line in pic.splitlines() if "|" in line}
    for q in range(7):
        for p in range(7):
            assert grid[q][p] == (rows[q][p] == "#")


def test_occurrence_matches_the_library():
    _, out, _ = run("occurrence", "--rep", D51, "--max", "4")
    assert json.loads(out) == {"max": 4, "grid": occurrence_grid(make("D", 5, 1), 4)}


def test_catalog_lines():
    code, out, _ = run("catalog", "--which", "A", "--p", "2", "--bound", "3")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and lines
    assert all(d["group"] == {"kind": "sp", "p": 2, "q": 1} for d in lines)
    assert all(d["nu"] == "symbolic" and d["pretty"].startswith("π(") for d in lines)
    assert run("catalog", "--which", "B", "--bound", "3")[0] == 2


def test_ktypes_and_infchar():
    param = theta(OStar2Rep(0), 2, 1).value
    _, lift_out, _ = run("lift", "--pair", "sp:2,1", "--chi", "0")
    pj = json.dumps(json.loads(lift_out)["result"])
    _, out, _ = run("ktypes", "--param", pj)
    assert json.loads(out)["lowest_ktypes"] == [ktype_to_json(k) for k in sorted(lowest_ktypes(param))]
    _, out, _ = run("infchar", "--param", pj)
    assert json.loads(out) == infchar_to_json(infinitesimal_character(param))
    assert json.loads(out)["weyl"] == "C"


def test_verify_small():
    code, out, _ = run("verify", "--max-pq", "2", "--max-param", "3", "--json")
    assert code == 0 and json.loads(out)["ok"] is True
    code, out, _ = run("verify", "--max-pq", "2", "--max-param", "3")
    assert out.strip().endswith("all checks passed")


def test_verify_exit_code_on_failure(monkeypatch):
    from thetalift import lifts
    monkeypatch.setitem(lifts.FORMULAS, "chi@(1,1)", lambda rep, p, q: lifts.ZERO)
    code, out, _ = run("verify", "--max-pq", "2", "--max-param", "3")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("argv", [
    ["lift", "--pair", "sp:1,1", "--rep", '{"family":"D","l1":"2","l2":"2"}'],
    ["lift", "--pair", "sp:1,1", "--rep", "not json"],
    ["lift", "--pair", "sp:1,1", "--rep", '{"family":"D"}'],
    ["infchar", "--param", '{"group": {"kind": "sp", "p": 1, "q": 0}, "r": 0, '
                '"lambda": {"left": ["0"], "right": []}, "psi": {"name": null, "tied_signs": {}}, '
                '"mu": [], "nu": []}'],
])
def test_invalid_input_exits_1(argv):
    code, out, err = run(*argv)
    assert code == 1 and out == ""
    assert err.split(":")[0].isidentifier()


def test_family_error_names_the_class():
    _, _, err = run("lift", "--pair", "sp:1,1", "--rep", '{"family":"D","l1":"2","l2":"2"}')
    assert err.startswith("FamilyConstraint:")


@pytest.mark.parametrize("argv", [
    [],
    ["lift", "--pair", "xx", "--chi", "0"],
    ["lift", "--pair", "sp:-1,2", "--chi", "0"],
    ["lift", "--pair", "sp:1,1"],
    ["lift", "--pair", "sp:1,1", "--chi", "0", "--rep", D51],
    ["picture", "--chi", "0", "--max", "-1"],
    ["catalog", "--which", "Z"],
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_max_cells_guard(monkeypatch):
    monkeypatch.setenv("THETA_MAX_CELLS", "10")
    code, _, err = run("picture", "--chi", "0", "--max", "5")
    assert code == 2 and "THETA_MAX_CELLS" in err
    assert run("picture", "--chi", "0", "--max", "2")[0] == 0
    monkeypatch.setenv("THETA_MAX_CELLS", "lots")
    assert run("occurrence", "--chi", "0", "--max", "2")[0] == 2


def test_console_entry_point_runs():
    res = subprocess.run([sys.executable, "-m", "thetalift", "lift", "--pair", "sp:1,1", "--chi", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["pretty"] == "π(1,∅,Psi1,1,1)"
