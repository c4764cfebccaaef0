import csv
import io
import json
import subprocess
import sys

import pytest

from hexresist.cli import main
from hexresist.quadfield import parse_quad


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_resist_exact():
    code, text = run("resist", "--chain", "linear", "--n", "1", "--a", "p:1", "--b", "q:1", "--exact")
    assert code == 0 and text.strip() == "5/6 + 0/1*sqrt2"


def test_resist_same_vertex():
    assert run("resist", "--chain", "linear", "--n", "3", "--a", "p:2", "--b", "p:2") == (0, "0\n")


def test_resist_cylinder_with_check():
    code, text = run("resist", "--chain", "cylinder", "--n", "3", "--a", "p:1", "--b", "q:1", "--json", "--check")
    rep = json.loads(text)
    assert code == 0
    assert float(rep["decimal"]) == pytest.approx(0.7142857, abs=1e-7)
    assert rep["delta"] < 1e-12 and rep["method"] == "formula"
    assert float(parse_quad(rep["exact"])) == pytest.approx(float(rep["decimal"]))


@pytest.mark.parametrize("method", ["oracle", "reduction"])
def test_resist_other_methods(method):
    code, text = run("resist", "--chain", "linear", "--n", "4", "--a", "p:0", "--b", "q:4", "--method", method, "--json")
    rep = json.loads(text)
    assert code == 0 and rep["method"] == method
    assert (rep["exact"] is None) == (method == "oracle")
    assert "delta" not in rep


def test_resist_reduction_stuck_exit_code():
    code, _ = run("resist", "--chain", "cylinder", "--n", "5", "--a", "p:1", "--b", "q:1", "--method", "reduction")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["resist", "--chain", "cylinder", "--n", "4", "--a", "p:0", "--b", "q:1"],
        ["resist", "--chain", "linear", "--n", "2", "--a", "u:2", "--b", "q:1"],
        ["resist", "--chain", "linear", "--n", "2", "--a", "z:1", "--b", "q:1"],
        ["resist", "--chain", "cylinder", "--n", "2", "--a", "p:1", "--b", "q:1"],
        ["kf", "--chain", "linear", "--n", "0"],
        ["reduce", "/nonexistent/file.net", "--terminals", "0,1"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["resist", "--chain", "tree", "--n", "1", "--a", "p:0", "--b", "p:1"])
    assert exc.value.code == 2


def test_kf():
    assert run("kf", "--chain", "linear", "--n", "1") == (0, "17.5\n")
    code, text = run("kf", "--chain", "cylinder", "--n", "3", "--json")
    assert json.loads(text)["decimal"].startswith("73.5714")
    code, text = run("kf", "--chain", "cylinder", "--n", "3", "--method", "oracle")
    assert float(text) == pytest.approx(73.5714285714)


def test_table_csv_is_symmetric():
    code, text = run("table", "--chain", "linear", "--n", "1", "--format", "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0 and len(rows) == 7
    header, body = rows[0], rows[1:]
    assert header[1:] == [r[0] for r in body]
    grid = [[float(x) for x in r[1:]] for r in body]
    assert len(grid) == 6 and all(len(r) == 6 for r in grid)
    for i in range(6):
        assert grid[i][i] == 0
        for j in range(6):
            assert grid[i][j] == grid[j][i]


def test_table_json_round_trips():
    code, text = run("table", "--chain", "cylinder", "--n", "3", "--format", "json", "--check")
    reps = json.loads(text)
    assert len(reps) == 66
    pairs = [(r["a"], r["b"]) for r in reps]
    assert pairs == sorted(pairs, key=lambda p: (p[0][0], int(p[0][2:]), p[1][0], int(p[1][2:])))
    for r in reps:
        assert float(parse_quad(r["exact"])) == pytest.approx(float(r["decimal"]), rel=1e-11)
        assert r["delta"] < 1e-9


def test_extremal():
    code, text = run("extremal", "--chain", "linear", "--n", "4")
    lines = text.splitlines()
    assert lines[0].startswith("max p:0 q:4") and lines[1].startswith("min p:2 q:2")


def test_verify_passes():
    code, text = run("verify", "--chain", "both", "--n-max", "6", "--tol", "1e-9", "--samples", "5", "--seed", "3")
    assert code == 0
    assert text.strip().splitlines()[-1].endswith("PASS")


def test_verify_fails_on_impossible_tolerance():
    code, text = run("verify", "--chain", "linear", "--n-max", "6", "--tol", "0")
    assert code == 1 and "FAIL" in text


def test_limits():
    code, text = run("limits", "--chain", "linear", "--json")
    rows = {r["name"]: r for r in json.loads(text)}
    assert parse_quad(rows["min-rung"]["exact"]) == parse_quad("0 + 1/2*sqrt2")
    code, text = run("limits", "--chain", "cylinder", "--n", "1000")
    assert "kf-ratio" in text and code == 0


def test_reduce_file(tmp_path):
    path = tmp_path / "tri.net"
    path.write_text("vertices 3\nname 0 a\nname 1 b\nname 2 c\nedge 0 1 1\nedge 1 2 1\nedge 0 2 1\n")
    code, text = run("reduce", str(path), "--terminals", "a,c")
    lines = [json.loads(x) for x in text.splitlines()]
    assert code == 0
    assert lines[-1]["kind"] == "result" and lines[-1]["status"] == "complete"
    assert lines[-1]["resistances"][0]["r"] == "2/3 + 0/1*sqrt2"
    assert all({"kind", "consumed", "produced"} <= set(x) for x in lines[:-1])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hexresist", "kf", "--chain", "linear", "--n", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "17.5"
