import json
import subprocess
import sys

import pytest

from polyblocks.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_companion(capsys):
    code, out, _ = run(capsys, "companion", "--poly", "1,0,1")
    assert code == 0
    assert json.loads(out)["companion"] == "4,0,1"


def test_verify_classical(capsys):
    code, out, _ = run(capsys, "verify", "--poly", "0,1", "--n", "2183", "--k", "17")
    assert code == 0
    d = json.loads(out)
    assert d["partners"]["2"] == {"partner": 7, "prime": "5"}


def test_gf(capsys):
    code, out, _ = run(capsys, "gf", "--poly", "0,1", "--kmax", "20")
    assert code == 0 and json.loads(out)["gf"] == 17


def test_domain_error_exit_1(capsys):
    code, out, err = run(capsys, "verify", "--poly", "0,1", "--n", "0", "--k", "17")
    assert code == 1
    assert json.loads(out) == {"error": "IsolatedOffset", "offset": 1,
                               "message": "f(n+1) is coprime to every other value in the block"}
    assert "IsolatedOffset" in err


@pytest.mark.parametrize("argv", [
    ["companion"],
    ["companion", "--poly", "1,x"],
    ["density", "--poly", "1,0,1"],
    ["frobnicate"],
    ["verify", "--poly", "0,1"],
])
def test_usage_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_usage_names_the_flag(capsys):
    with pytest.raises(SystemExit):
        main(["density", "--poly", "1,0,1"])
    assert "--x" in capsys.readouterr().err


def test_plan_roundtrip(tmp_path, capsys):
    plan = tmp_path / "plan.json"
    code, _, _ = run(capsys, "cover", "--poly", "1,0,1", "--N", "262", "--out", str(plan))
    assert code == 0
    assert json.loads(plan.read_text())["kind"] == "CoverPlan"
    code, out, _ = run(capsys, "verify", "--plan", str(plan))
    assert code == 0 and json.loads(out)["k"] == 262


def test_witness_roundtrip(tmp_path, capsys):
    path = tmp_path / "w.json"
    assert run(capsys, "verify", "--poly", "0,1", "--n", "2183", "--k", "17", "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "verify", "--plan", str(path))
    assert code == 0 and json.loads(out) == json.loads(path.read_text())


def test_tampered_plan_rejected(tmp_path, capsys):
    path = tmp_path / "plan.json"
    run(capsys, "cover", "--poly", "1,0,1", "--N", "262", "--out", str(path))
    d = json.loads(path.read_text())
    d["n0"] = str(int(d["n0"]) + 1)
    path.write_text(json.dumps(d))
    code, out, _ = run(capsys, "verify", "--plan", str(path))
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["decide", "--poly", "1,0,1", "--k", "5", "--scan-max", "100000", "--samples", "300",
     "--seed", "4"],
    ["harvest", "--poly", "1,0,1", "--N", "300", "--format", "csv"],
    ["classify", "--poly", "1,-1,0,1", "--format", "text"],
])
def test_byte_identical_output(capsys, argv):
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second and first


def test_formats(capsys):
    _, out, _ = run(capsys, "harvest", "--poly", "1,0,1", "--N", "8", "--format", "csv")
    assert out.splitlines() == ["p,r,z_minus,z_plus", "5,1,2,3", "13,3,5,8"]
    _, out, _ = run(capsys, "roots", "--poly", "1,0,1", "--p", "5", "--format", "text")
    assert "roots: [\"2\", \"3\"]" in out
    _, out, _ = run(capsys, "valuation", "--poly", "1,0,1", "--p", "5", "--N", "25",
                    "--format", "csv")
    header, row = out.splitlines()
    assert dict(zip(header.split(","), row.split(",")))["nu"] == "12"


def test_every_command_runs(capsys):
    cases = [
        ["classify", "--poly", "1,0,1"],
        ["roots", "--poly", "1,0,0,0,1", "--p", "3"],
        ["density", "--poly", "1,0,1", "--x", "1000"],
        ["valuation", "--poly", "1,0,1", "--p", "13", "--N", "100"],
        ["harvest", "--poly", "1,0,1", "--N", "8"],
        ["cover", "--poly", "1,-3,0,1", "--kmax", "200"],
        ["decide", "--poly", "0,1", "--k", "17", "--minimal"],
        ["gscan", "--poly", "0,1", "--kmax", "20"],
    ]
    for argv in cases:
        code, out, _ = run(capsys, *argv)
        assert code == 0, argv
        json.loads(out)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polyblocks", "companion", "--poly", "1,0,2"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["companion"] == "8,0,4"
