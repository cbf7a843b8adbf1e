import json
import shutil
import subprocess
import sys

import pytest

from schubred.cli import dumps, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_coeff_gr36(capsys):
    assert run(capsys, "coeff", "A5", "gr", "3", "--I", "2,4,6", "--J", "2,4,6", "--K", "2,4,6") == (
        0, {"c": 2, "c_bk": 2})


def test_coeff_lr_and_flags(capsys):
    assert run(capsys, "coeff", "--lr", "2,1", "2,1", "3,2,1") == (0, {"lr": 2})
    flag = "3,6,9/2,3,5,6,8,9"
    assert run(capsys, "coeff", "--flag", flag, "--flag", flag, "--flag", flag, "--sizes", "3,6,9") == (
        0, {"c_bk": 6})


def test_coeff_backends_agree(capsys):
    args = ["coeff", "A5", "gr", "3", "--I", "2,4,6", "--J", "2,4,6", "--K", "2,4,6"]
    assert run(capsys, *args, "--backend", "localization")[1] == run(capsys, *args, "--backend", "lr")[1]


def test_coeff_n_zero_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["coeff", "--n", "0"])
    assert e.value.code == 2
    assert "usage" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["coeff", "A5", "gr", "3", "--I", "2,4"],
    ["coeff", "Q5", "gr", "3", "--I", "2,4,6", "--J", "2,4,6"],
    ["tensor", "B4", "--zeta", "x:1"],
    ["paper-suite", "--jobs", "0"],
])
def test_malformed_command_lines(argv, capsys):
    with pytest.raises(SystemExit) as e:
        main(argv)
    assert e.value.code == 2


def test_branch_class_gr610(capsys):
    code, out = run(capsys, "branch-class", "A9", "gr", "6", "--I", "2,4,5,6,9,10",
                    "--J", "3,4,6,7,9,10", "--K", "2,4,5,7,8,10")
    assert code == 0
    assert out["c"] == 2
    assert out["theta"] == ["w2+2w6", "w4+w7", "w2+w5+w8"]
    assert out["flags"]["divisible_by_2"] and out["flags"]["theta_on_face"]


def test_theta_gl_lift(capsys):
    code, out = run(capsys, "theta", "A5", "gr", "3", "--I", "2,4,6", "--J", "2,4,6", "--K", "2,4,6")
    assert code == 0
    assert out["theta"] == ["w2+w4"] * 3
    assert sum(map(sum, out["theta_gl"])) == 0


def test_precondition_failures_give_error_json(capsys):
    code, out = run(capsys, "coeff", "A5", "gr", "3", "--I", "2,4,7", "--J", "2,4,6", "--K", "2,4,6")
    assert code == 1 and out["error"]["kind"] == "precondition"
    code, out = run(capsys, "lr2-orbit", "--lam", "1", "--mu", "1", "--nu", "2", "--r", "2")
    assert code == 1 and out["error"]["kind"] == "precondition"
    code, out = run(capsys, "reduce-verify", "A3", "gr", "2", "--I", "1,3", "--J", "2,4", "--K", "3,4",
                    "--zeta", "w:[0,0,0]", "--zeta", "w:[0,0,0]", "--zeta", "w:[0,0,0]")
    assert code == 1 and out["error"]["kind"] == "unsupported"


def test_not_divisible_error_lists_coefficients(capsys, monkeypatch):
    from schubred import cli
    from schubred.branch import NotDivisibleError

    def odd(rep):
        raise NotDivisibleError({(0, 2): 3, (1, 4): 0})

    monkeypatch.setattr(cli, "theta", odd)
    code, out = run(capsys, "theta", "A5", "gr", "3", "--I", "2,4,6", "--J", "2,4,6", "--K", "2,4,6")
    assert code == 1
    assert out["error"]["kind"] == "not-divisible"
    assert out["error"]["coefficients"] == [{"factor": 1, "node": 2, "value": 3}]


def test_c3_class_is_even_so_theta_exists(capsys):
    code, out = run(capsys, "theta", "A7", "gr", "4", "--v", "[35681247]", "--v", "[24681357]",
                    "--v", "[24681357]")
    assert code == 0
    assert out["theta"] == ["2w3+3w6", "2w2+2w4+2w6", "2w2+2w4+2w6"]
    assert out["on_face"] is False


def test_reduce_verify_and_alt_sum(capsys):
    cls = ["A5", "gr", "3", "--I", "2,4,6", "--J", "2,4,6", "--K", "2,4,6"]
    z = ["--zeta", "p:2,2,1,1,0,0", "--zeta", "p:2,2,1,1,0,0", "--zeta", "p:0,0,-1,-1,-2,-2"]
    code, out = run(capsys, "reduce-verify", *cls, *z)
    assert code == 0 and out["holds"]
    code, out = run(capsys, "alt-sum", *cls, *z, "--direct")
    assert code == 0 and out["value"] == out["direct"]
    code, out = run(capsys, "reduce-verify", *cls, "--stretch", "3")
    assert [r["m"] for r in out["rows"]] == [1, 3, 6, 10]


def test_alt_sum_with_theta_from_a_coarser_parabolic(capsys):
    lam = "p:41,41,36,36,35,24,0,0,0,0"
    mu = "p:-41,-41,-41,-41,-48,-48,-49,-65,-65,-72"
    nu = "p:49,49,42,42,40,25,25,22,2,2"
    code, out = run(capsys, "alt-sum", "A9", "--omit", "2,6", "--I", "5,6/2,4,5,6,9,10",
                    "--J", "7,10/3,4,6,7,9,10", "--K", "5,8/2,4,5,7,8,10", "--theta-omit", "6",
                    "--zeta", lam, "--zeta", mu, "--zeta", nu, "--direct")
    assert code == 0
    assert out["terms"][:3] == [9, 4, 1] and out["value"] == out["direct"] == 6


def test_lr2_orbit(capsys):
    code, out = run(capsys, "lr2-orbit", "--lam", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--r", "3")
    assert (code, out) == (0, {"orbit": [[[2, 1], [2, 1], [3, 2, 1]]], "cycle_start": 0})


def test_tensor(capsys):
    assert run(capsys, "tensor", "B4", "--zeta", "w:[1,0,0,0]", "--dim") == (0, {"dim": 9})
    assert run(capsys, "tensor", "A2", "--zeta", "w:[1,0]", "--zeta", "w:[0,1]", "--decompose") == (
        0, {"decomposition": {"w:[0,0]": 1, "w:[1,1]": 1}})
    assert run(capsys, "tensor", "B4", "--zeta", "w:[0,2,0,0]", "--zeta", "w:[0,2,0,0]",
               "--zeta", "w:[0,0,2,0]") == (0, {"m": 1})


def test_horn_and_puzzle(capsys):
    code, out = run(capsys, "horn", "A3", "gr", "2", "--I", "1,3", "--J", "2,4", "--K", "3,4")
    assert code == 0 and out["c"] == 1 and out["functional"]
    assert run(capsys, "puzzle", "121212", "121212", "121212") == (0, {"puzzles": 2})


def test_golden_suite_is_green_and_deterministic(capsys):
    code, first = run(capsys, "paper-suite")
    assert code == 0 and first["ok"] and first["passed"] == first["total"]
    assert "seconds" not in first["checks"][0]
    text = dumps(first)
    main(["paper-suite", "--jobs", "2"])
    assert capsys.readouterr().out.strip() == text


def test_big_integers_become_strings():
    out = json.loads(dumps({"a": 2 ** 53, "b": 2 ** 53 - 1, "c": [-(2 ** 60)], "d": True}))
    assert out == {"a": str(2 ** 53), "b": 2 ** 53 - 1, "c": [str(-(2 ** 60))], "d": True}


def test_console_script_output_is_byte_identical():
    exe = shutil.which("schubred")
    cmd = [exe] if exe else [sys.executable, "-m", "schubred.cli"]
    args = ["branch-class", "A5", "gr", "3", "--I", "2,4,6", "--J", "2,4,6", "--K", "2,4,6"]
    outs = {subprocess.run(cmd + args, capture_output=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1


def test_backend_environment_variable(monkeypatch, capsys):
    monkeypatch.setenv("SCHUBRED_BACKEND", "localization")
    assert run(capsys, "coeff", "A3", "gr", "2", "--I", "1,3", "--J", "2,4", "--K", "3,4") == (
        0, {"c": 1, "c_bk": 1})
    monkeypatch.setenv("SCHUBRED_BACKEND", "nonsense")
    code, out = run(capsys, "coeff", "A3", "gr", "2", "--I", "1,3", "--J", "2,4", "--K", "3,4")
    assert code == 1
