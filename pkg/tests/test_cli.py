import json
import subprocess
import sys

import pytest

from aode.cli import main

from conftest import TWO_CHAIN_SYSTEM, DIM_TWO_EQUATION


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reduce_text(capsys):
    code, out, _ = run(capsys, "reduce", "-e", TWO_CHAIN_SYSTEM)
    assert code == 0
    assert "reduced equation: H = y*y' - 1" in out


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", "--order", "3", "--format", "json", "-e", TWO_CHAIN_SYSTEM)
    data = json.loads(out)
    assert code == 0
    fam, = data["families"]
    assert fam["terms"] == [["0", "y0"], ["1", "1/y0"], ["2", "-1/(2*y0^3)"], ["3", "1/(2*y0^5)"]]
    assert fam["constraints"] == ["y0 != 0"]
    assert data["pole_branches"] == []
    for br in data["critical"]:
        coeff = br["terms"][0][1]
        assert coeff["minpoly"] == "t^2 - 2" and len(coeff["interval"]) == 2
        assert br["verified"]


def test_solve_at_point(capsys):
    code, out, _ = run(capsys, "solve", "--point=-1/2,3", "-e", TWO_CHAIN_SYSTEM)
    assert code == 0 and "(x + 1/2)" in out and "verified: yes" in out


def test_solve_algebraic(capsys):
    code, out, _ = run(capsys, "solve-algebraic", "-e", TWO_CHAIN_SYSTEM)
    assert code == 0 and "Y^2 - 2*x - k = 0" in out
    code, out, _ = run(capsys, "solve-algebraic", "--rational-only", "-e", "y' + y^2 = 0")
    assert "y = (1)/(x) with x -> x + c" in out


def test_verify_exit_codes(capsys):
    ok = run(capsys, "verify", "-e", TWO_CHAIN_SYSTEM, "--series", "1 + x - 1/2*x^2 + 1/2*x^3",
             "--order", "3")
    bad = run(capsys, "verify", "-e", "y' = 1", "--series", "1 + 2*x", "--order", "1")
    alg = run(capsys, "verify", "-e", TWO_CHAIN_SYSTEM, "--series", "a*x^(1/2)", "--minpoly",
              "t^2 - 2", "--root=-2,-1", "--order", "10", "--exact")
    assert (ok[0], bad[0], alg[0]) == (0, 1, 0)


def test_triangularize(capsys):
    code, out, _ = run(capsys, "triangularize", "-e", TWO_CHAIN_SYSTEM)
    assert code == 0 and out.count("chain") == 2


@pytest.mark.parametrize("argv, code", [
    (["reduce", "-e", DIM_TWO_EQUATION], 2),
    (["reduce", "-e", "x*y' = 1"], 3),
    (["reduce", "-e", "y' = = 1"], 3),
    (["reduce", "-e", "y^(40) = y"], 4),
    (["reduce", "-e", "y^2 = 4; y' = y"], 0),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_file_and_stdin(tmp_path):
    path = tmp_path / "sys.ode"
    path.write_text(TWO_CHAIN_SYSTEM.replace("; ", "\n"))
    cmd = [sys.executable, "-m", "aode.cli", "reduce"]
    by_file = subprocess.run(cmd + [str(path)], capture_output=True, text=True, check=True)
    by_stdin = subprocess.run(cmd, input=TWO_CHAIN_SYSTEM, capture_output=True, text=True, check=True)
    assert by_file.stdout == by_stdin.stdout


def test_output_is_deterministic(capsys):
    first = run(capsys, "solve", "--at-infinity", "--format", "json", "-e", TWO_CHAIN_SYSTEM)[1]
    second = run(capsys, "solve", "--at-infinity", "--format", "json", "-e", TWO_CHAIN_SYSTEM)[1]
    assert first == second
