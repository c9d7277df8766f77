from __future__ import annotations

import json
import subprocess
import sys

import pytest

from spreconf.cli import main
from spreconf.formats import parse_instance


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cube(tmp_path, capsys):
    path = tmp_path / "cube.txt"
    code, out, _ = run(capsys, "gen", "hypercube", "5", "00101", "10011")
    assert code == 0
    path.write_text(out)
    return path


def test_count_chain(capsys):
    assert run(capsys, "count", "gen:chain:2:3") == (0, "9\n", "")


def test_solve_hypercube_worked_example(cube, tmp_path, capsys):
    # flips (1,3,4) versus (4,3,1) from s = 00101
    (tmp_path / "p").write_text("5 21 17 19\n")
    (tmp_path / "q").write_text("5 7 3 19\n")
    code, out, _ = run(capsys, "solve", str(cube), "--class", "hypercube", "--p", str(tmp_path / "p"), "--q", str(tmp_path / "q"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "verdict yes" and lines[1] == "steps 3 k 1"
    assert lines[2] == "5 21 17 19" and lines[-1] == "5 7 3 19"
    code, oracle_out, _ = run(capsys, "oracle", str(cube), "--p", "5,21,17,19", "--q", "5,7,3,19")
    assert oracle_out.splitlines()[1] == "steps 3 k 1"


def test_verify_exhaustive(capsys):
    code, out, _ = run(capsys, "verify", "--class", "permutation", "--n", "6", "--trials", "exhaustive")
    assert code == 0 and out.rstrip().endswith("agreement 100.00%")


def test_verify_json_and_determinism(capsys):
    first = run(capsys, "verify", "--class", "circle", "--n", "7", "--trials", "20", "--json", "--seed", "4")
    again = run(capsys, "verify", "--class", "circle", "--n", "7", "--trials", "20", "--json", "--seed", "4")
    assert first == again
    assert json.loads(first[1])["agreement"] == 1.0


def test_no_verdict_exits_one(tmp_path, capsys):
    inst = tmp_path / "c6.txt"
    inst.write_text("6 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 0\ns 0\nt 3\n")
    code, out, _ = run(capsys, "oracle", str(inst), "--p", "0,1,2,3", "--q", "0,5,4,3")
    assert (code, out) == (1, "verdict no\n")
    code, out, _ = run(capsys, "oracle", str(inst), "--p", "0,1,2,3", "--q", "0,5,4,3", "--k", "2")
    assert code == 0 and "steps 1 k 2" in out
    assert run(capsys, "diameter", str(inst))[1] == "inf\n"
    assert run(capsys, "diameter", str(inst), "--k", "2")[1] == "1\n"


def test_cost_commands(tmp_path, capsys):
    inst = tmp_path / "c6.txt"
    inst.write_text("6 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 0\ns 0\nt 3\n")
    costs = tmp_path / "costs.txt"
    costs.write_text("1 2 3 4 5 6\n")
    base = [str(inst), "--p", "0,1,2,3", "--q", "0,5,4,3"]
    code, out, _ = run(capsys, "cost", "minmax", *base, "--costs", str(costs))
    assert code == 0 and out.startswith("value 2\n")
    code, out, _ = run(capsys, "cost", "mintop", *base, "--costs", str(costs), "--l", "inf")
    assert out.startswith("value 2\n")
    code, out, _ = run(capsys, "cost", "reduc", *base, "--l", "1")
    assert (code, out) == (1, "verdict no\n")
    code, _, err = run(capsys, "cost", "mintop", *base, "--costs", str(costs), "--l", "0")
    assert code == 2 and "--l" in err
    code, out, _ = run(capsys, "cost", "minsum", *base, "--costs", "1,2")
    assert code == 0 and out.startswith("value 2\n")
    code, _, err = run(capsys, "cost", "minsum", *base, "--costs", "2,1")
    assert code == 2 and "non-decreasing" in err


def test_gen_transforms(tmp_path, capsys):
    src = tmp_path / "c4.txt"
    src.write_text("4 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ns 0\nt 2\n")
    code, out, _ = run(capsys, "gen", "subdivide", str(src), "1")
    assert parse_instance(out).instance.graph.n == 8
    code, out, _ = run(capsys, "gen", "power", str(src), "2")
    assert parse_instance(out).instance.distance == 1
    code, out, _ = run(capsys, "gen", "linegraph", str(src), "3", "--p", "0,1,2", "--q", "0,3,2")
    assert code == 0
    red = parse_instance(out).instance
    assert red.graph.n == 8  # 6 stretched edges plus the two pendant ones
    assert "# p " in out


def test_exit_codes(tmp_path, capsys, monkeypatch):
    assert run(capsys, "solve", str(tmp_path / "missing"), "--class", "bounded", "--p", "0", "--q", "0")[0] == 2
    assert run(capsys, "count", "gen:wheel:3")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\ne 0 0\ns 0\nt 1\n")
    code, _, err = run(capsys, "count", str(bad))
    assert code == 2 and "line 2" in err
    monkeypatch.setenv("RECONFIG_PATH_CAP", "3")
    assert run(capsys, "diameter", "gen:chain:2:2")[0] == 3


def test_solve_needs_representation(capsys):
    code, _, err = run(capsys, "solve", "gen:chain:2:2", "--class", "permutation", "--p", "0,1,3", "--q", "0,2,3")
    assert code == 2 and "representation" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spreconf", "count", "gen:chain:3:2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "8\n"


def test_help_documents_formats(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0 and "RECONFIG_PATH_CAP" in out and "hypercube d s_bits t_bits" in out
