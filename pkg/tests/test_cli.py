import json
import subprocess
import sys

import pytest

from springer_hh.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_center_a1(capsys):
    code, out, _ = run(capsys, "center", "--type", "A", "--rank", "1")
    data = json.loads(out)
    assert code == 0
    assert data["schema"] == "springer-hh/1" and data["command"] == "center" and data["type"] == "A1"
    assert data["exact"] == 3 and data["lower_bound"] == 3


def test_center_a2_has_bound_only(capsys):
    data = json.loads(run(capsys, "center", "--type", "A", "--rank", "2")[1])
    assert data["exact"] is None and data["lower_bound"] == 11


def test_frakh_b2(capsys):
    data = json.loads(run(capsys, "frakh", "--type", "B", "--rank", "2")[1])
    assert data["dimension"] == 15 and len(data["products"]) == 15
    assert all(law["passed"] for law in data["laws"])


def test_euler_a1(capsys):
    data = json.loads(run(capsys, "euler", "--type", "A", "--rank", "1", "--kmax", "4")[1])
    values = {(e["j"], e["k"]): e["value"] for e in data["entries"]}
    assert values[(0, 4)] == 5 and values[(2, -2)] == 1
    assert data["truncation"]["k_min"] == -4


def test_rank1(capsys):
    data = json.loads(run(capsys, "rank1", "--smax", "4")[1])
    assert data["hh"][0]["dim"] == 3 and data["complete"]
    assert {(c["i"], c["j"], c["k"]) for c in data["center_cells"]} == {(0, 0, 0), (1, 1, -2), (0, 2, -2)}


@pytest.mark.parametrize("cmd", ["roots", "weyl", "schubert", "bundles"])
def test_other_commands(capsys, cmd):
    code, out, _ = run(capsys, cmd, "--type", "G", "--rank", "2")
    assert code == 0 and json.loads(out)["command"] == cmd


def test_deterministic_output(capsys):
    a = run(capsys, "schubert", "--type", "B", "--rank", "2")[1]
    b = run(capsys, "schubert", "--type", "B", "--rank", "2")[1]
    assert a == b


def test_csv_and_text(capsys):
    out = run(capsys, "euler", "--format", "csv", "--kmax", "2")[1]
    assert out.splitlines()[0] == "j,k,value"
    out = run(capsys, "weyl", "--format", "text", "--type", "A", "--rank", "2")[1]
    assert out.startswith("# weyl A2") and "word=s1s2s1  length=3" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["roots", "--type", "B", "--rank", "1"],
        ["euler", "--kmax", "3"],
        ["euler", "--kmin", "8", "--kmax", "4"],
        ["euler", "--jmax", "9"],
        ["rank1", "--type", "A", "--rank", "2"],
        ["rank1", "--smax", "-1"],
        [],
    ],
)
def test_parameter_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_resource_error_exit_3(capsys):
    code, _, err = run(capsys, "weyl", "--type", "E", "--rank", "8")
    assert code == 3 and "error:" in err


def test_self_test(capsys):
    code, out, _ = run(capsys, "--self-test", "--seed", "3")
    assert code == 0
    assert out and all(line.startswith("PASS") for line in out.splitlines())


def test_cache_flag_and_env(capsys, tmp_path, monkeypatch):
    env_dir, flag_dir = tmp_path / "env", tmp_path / "flag"
    monkeypatch.setenv("SPRINGER_HH_CACHE", str(env_dir))
    run(capsys, "weyl", "--type", "A", "--rank", "2")
    assert list(env_dir.iterdir())
    run(capsys, "weyl", "--type", "B", "--rank", "2", "--cache-dir", str(flag_dir))
    assert [p.name for p in flag_dir.iterdir()] == ["weyl-B2-v1.shh"]
    assert not (env_dir / "weyl-B2-v1.shh").exists()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "springer_hh", "center", "--type", "A", "--rank", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["exact"] == 3
