"""Command-line interface: every subcommand plus exit codes."""

import json

import pytest

from hypertree_spectra import Hypergraph, hyperstar, save
from hypertree_spectra.cli import main

from conftest import path_graph


@pytest.fixture
def tree_file(tmp_path):
    path = tmp_path / "tree.json"
    save(path_graph(4), str(path))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_validate(capsys, tree_file):
    code, out = run(capsys, "validate", tree_file)
    assert code == 0
    assert json.loads(out)["is_hypertree"] is True


def test_validate_failure_exit(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    save(Hypergraph(3, 6, [(0, 1, 2), (3, 4, 5)]), str(bad))
    code, out = run(capsys, "validate", str(bad))
    assert code == 1
    assert json.loads(out)["connected"] is False


def test_matchpoly(capsys, tree_file):
    code, out = run(capsys, "matchpoly", tree_file)
    assert code == 0
    assert json.loads(out)["coeffs"] == {"4": "1", "2": "-3", "0": "1"}


def test_rho_both(capsys, tree_file):
    code, out = run(capsys, "rho", tree_file, "--method", "both")
    assert code == 0
    data = json.loads(out)
    assert abs(data["rho"] - 1.6180339887498949) < 1e-9
    assert data["relative_gap"] < 1e-6
    assert data["residual"] <= 1e-10


def test_rho_single_methods(capsys, tree_file):
    code, out = run(capsys, "rho", tree_file, "--method", "power", "--tol", "1e-8")
    assert code == 0
    assert "polyroot" not in json.loads(out)
    code, out = run(capsys, "rho", tree_file, "--method", "poly")
    assert code == 0
    assert "power" not in json.loads(out)


def test_extremal_emit(capsys, tmp_path):
    target = tmp_path / "a.json"
    code, _ = run(capsys, "extremal", "3", "2", "3", "--emit", str(target))
    assert code == 0
    data = json.loads(target.read_text())
    assert data["r"] == 3 and data["n"] == 7 and len(data["edges"]) == 3


def test_extremal_stdout(capsys):
    code, out = run(capsys, "extremal", "4", "1", "2")
    assert code == 0
    assert json.loads(out)["n"] == 5


def test_bound(capsys):
    code, out = run(capsys, "bound", "3", "2", "2")
    assert code == 0
    data = json.loads(out)
    assert data["q"] == 1 and data["s"] == 0 and data["l"] == 0
    assert abs(data["rho"] - 1.6180339887498949) < 1e-9


def test_bound_perfect(capsys):
    code, out = run(capsys, "bound", "4", "3", "3", "--perfect")
    assert code == 0
    assert abs(json.loads(out)["rho"] - 1.4655712318767682) < 1e-9


def test_bound_infeasible_exit(capsys):
    assert main(["bound", "5", "4", "3"]) == 2


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "3", "3")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert len(lines) == 2
    code, out = run(capsys, "enumerate", "3", "3", "--matching", "2")
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert len(lines) == 1 and lines[0]["nu"] == 2


def test_verify(capsys):
    code, out = run(capsys, "verify", "3", "2", "3")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_suite_with_config(capsys, tmp_path):
    config = tmp_path / "config.json"
    csv_path = tmp_path / "out.csv"
    config.write_text(json.dumps({"ranges": [{"r": 3, "m_max": 3}], "csv_path": str(csv_path)}))
    code, _ = run(capsys, "suite", "--config", str(config))
    assert code == 0
    assert csv_path.read_text().startswith("m,k,r,")


def test_suite_stdout(capsys, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"triples": [[3, 2, 3]]}))
    code, out = run(capsys, "suite", "--config", str(config))
    assert code == 0
    assert out.startswith("m,k,r,")


def test_compare(capsys, tmp_path, tree_file):
    other = tmp_path / "star.json"
    save(hyperstar(3, 2), str(other))
    code, out = run(capsys, "compare", tree_file, str(other))
    assert code == 0
    data = json.loads(out)
    assert data["relation"] == "precedes_strict"
    assert "certificate" in data


def test_chain(capsys):
    code, out = run(capsys, "chain", "--from", "2,2,2", "--to", "3,2,1")
    assert code == 0
    assert json.loads(out) == [[3, 2, 1], [2, 2, 2]]


def test_usage_error_exit_code():
    assert main(["chain", "--from", "3,2,1", "--to", "2,2,2"]) == 2
