import json
import subprocess
import sys

import pytest

from gammab.cli import run


def ok(argv):
    code, out = run(argv)
    assert code == 0, argv
    return out


def test_gamma_g6():
    doc = json.loads(ok(["gamma", "--g6", "C~"]))
    assert doc["gamma"] == 4 and doc["witness"] == [0, 1, 2, 3]


def test_gamma_oracle_flag():
    doc = json.loads(ok(["gamma", "--family", "B:3", "--oracle"]))
    assert doc["gamma"] == 4 and doc["method"] == "oracle"
    assert max(doc["coloring"]) == 4


def test_gamma_oracle_refuses_large():
    code, _ = run(["gamma", "--family", "path:10", "--oracle"])
    assert code == 1


def test_sweep_csv():
    out = ok(["sweep", "--family", "B", "--range", "2..5", "--format", "csv"])
    assert out.splitlines() == [
        "family,param,n,delta,omega,chi,m,gamma,b,gamma_minus_b",
        "B,2,4,2,2,2,2,3,2,1",
        "B,3,6,3,2,2,3,4,2,2",
        "B,4,8,4,2,2,4,5,2,3",
        "B,5,10,5,2,2,5,6,2,4",
    ]


def test_sweep_to_file(tmp_path):
    path = tmp_path / "r.json"
    doc = json.loads(ok(["sweep", "--family", "R", "--range", "2,3", "--output", str(path)]))
    assert doc["members"] == 2
    assert json.loads(path.read_text())["family"] == "R"


def test_monotone_exact():
    doc = json.loads(ok(["monotone", "--family", "B:4", "--exact"]))
    assert doc["monotone"] is False and doc["witness"]["b"] == 3


def test_monotone_sample():
    doc = json.loads(ok(["monotone", "--family", "K:5", "--sample", "50", "1"]))
    assert doc["monotone"] is True and doc["method"] == "sample"


def test_monotone_over_cap_suggests_sampling(capsys):
    code, _ = run(["monotone", "--family", "B:8"])
    assert code == 1
    assert "--sample" in capsys.readouterr().err


@pytest.mark.parametrize("cmd,value", [("bnum", 2), ("m", 4), ("chi", 2), ("omega", 2)])
def test_value_commands(cmd, value):
    doc = json.loads(ok([cmd, "--family", "B:4"]))
    assert doc["value"] == value and "witness" in doc


def test_eliminate():
    doc = json.loads(ok(["eliminate", "--family", "path:4", "--coloring", "1,2,3,1"]))
    assert doc == {"value": 2, "witness": [2, 1, 2, 1]}


def test_eliminate_improper_is_domain_error():
    assert run(["eliminate", "--family", "path:2", "--coloring", "1,1"])[0] == 1


def test_check_commands():
    assert json.loads(ok(["check-grundy", "--family", "path:4", "--coloring", "1,2,3,1"]))["valid"]
    doc = json.loads(ok(["check-bcoloring", "--family", "path:4", "--coloring", "1,2,3,1"]))
    assert doc["valid"] is False and doc["dominators"] == {"1": None, "2": 1, "3": 2}
    doc = json.loads(ok(["check-bcoloring", "--family", "path:2", "--coloring", "1,1"]))
    assert doc == {"valid": False, "proper": False, "dominators": None}


def test_forb():
    doc = json.loads(ok(["forb", "--family", "B:4", "--pattern", "path:6"]))
    assert doc["free"] is True
    doc = json.loads(ok(["forb", "--family", "B:3", "--pattern", "path:6", "--pattern", "g6:DhC"]))
    assert doc["free"] is False and doc["embeddings"]["g6:DhC"] is not None


def test_profile_and_file_input(tmp_path):
    path = tmp_path / "p5.txt"
    path.write_text("5\n0 1\n1 2\n2 3\n3 4\n")
    doc = json.loads(ok(["profile", "--file", str(path)]))
    assert [doc[k] for k in ("n", "delta", "omega", "chi", "m", "gamma", "b")] == [5, 2, 2, 2, 3, 3, 3]


def test_gen_formats():
    assert ok(["gen", "--family", "K:4", "--format", "graph6"]) == "C~\n"
    assert ok(["gen", "--family", "path:3", "--format", "edge-list"]) == "3\n0 1\n1 2\n"
    doc = json.loads(ok(["gen", "--family", "B:2"]))
    assert doc["n"] == 4 and doc["edges"] == [[0, 3], [1, 2], [1, 3]]


def test_cap_flag_and_env(monkeypatch):
    assert run(["bnum", "--family", "B:4", "--cap", "6"])[0] == 1
    monkeypatch.setenv("GAMMAB_CAP_N", "6")
    assert run(["gamma", "--family", "B:4"])[0] == 1
    assert run(["gamma", "--family", "B:4", "--cap", "8"])[0] == 0


@pytest.mark.parametrize("argv", [
    [],
    ["gamma"],
    ["gamma", "--g6", "C~", "--family", "B:3"],
    ["frobnicate"],
    ["sweep", "--family", "B", "--range", "two..six"],
    ["eliminate", "--family", "path:3", "--coloring", "a,b,c"],
])
def test_usage_errors(argv):
    assert run(argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ["gamma", "--g6", "C!"],
    ["gamma", "--family", "B:1"],
    ["gamma", "--file", "/nonexistent/graph.txt"],
    ["bnum", "--family", "nope:3"],
])
def test_domain_errors(argv, capsys):
    assert run(argv)[0] == 1
    assert capsys.readouterr().err.startswith("gammab: error:")


def test_deterministic_with_seed():
    a = run(["monotone", "--family", "B:5", "--sample", "200", "9"])
    b = run(["monotone", "--family", "B:5", "--sample", "200", "9"])
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gammab", "gamma", "--g6", "C~"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["gamma"] == 4
    proc = subprocess.run([sys.executable, "-m", "gammab", "gamma"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr
