import json

import pytest

from rumin_poisson.cli import main


def test_verify_json(capsys):
    assert main(["verify", "--n", "1", "--suite", "kostant"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 1 and data["suite"] == "kostant"


def test_verify_strict_promotes_discrepancy(capsys):
    assert main(["verify", "--n", "1", "--suite", "structure"]) == 0
    assert main(["verify", "--n", "1", "--suite", "structure", "--strict"]) == 1


def test_verify_report_file(tmp_path, capsys):
    path = tmp_path / "out.txt"
    assert main(["verify", "--n", "1", "--suite", "kappa", "--report", str(path), "--format", "text"]) == 0
    assert path.read_text().startswith("n=1 suite=kappa")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--n", "1", "--suite", "bogus"],
        ["verify", "--n", "0"],
        ["verify", "--n", "4"],
        ["verify"],
        ["kernel", "low", "--n", "1"],
        ["kernel", "low", "--n", "1", "--p", "2", "--q", "0"],
        ["kernel", "high", "--n", "1", "--p", "1", "--q", "1", "--alpha", "x"],
        ["invariants", "--n", "1", "--bidegree", "9"],
        ["model", "--n", "1", "--export", "/no/such/dir/m.json"],
        ["frobnicate"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_invariants(capsys):
    assert main(["invariants", "--n", "1", "--bidegree", "1,0"]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 2


def test_kernel_out(tmp_path):
    path = tmp_path / "k.json"
    assert main(["kernel", "high", "--n", "1", "--p", "1", "--q", "1", "--alpha", "2", "--beta", "3i", "--out", str(path)]) == 0
    data = json.loads(path.read_text())
    assert data["terms"] and data["alpha"] == "2"


def test_kernel_real(capsys):
    assert main(["kernel", "real", "--n", "1", "--k", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["k"] == 1


def test_model_export(tmp_path):
    path = tmp_path / "m.json"
    assert main(["model", "--n", "2", "--export", str(path)]) == 0
    assert json.loads(path.read_text())["n"] == 2
