import json
import subprocess
import sys

import pytest

from loopspec import read_edge_list, verify_all
from loopspec.cli import main, run_sweep

WORKED = "2 2\n1 1\n1 2\n"


@pytest.fixture
def worked_file(tmp_path):
    path = tmp_path / "worked.el"
    path.write_text(WORKED)
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_text(worked_file, capsys):
    code, out, _ = run_cli(capsys, "analyze", worked_file)
    assert code == 0
    assert "n: 2" in out
    assert "loops: 1" in out
    assert "pseudo-connected: yes" in out
    assert "eigenvalues: 0.381966011 2.61803399" in out
    assert "eq8: 2.61803399 <= 3" in out


def test_analyze_json(worked_file, capsys):
    code, out, _ = run_cli(capsys, "analyze", worked_file, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 2
    assert doc["q"] == 1
    assert doc["laplacian"] == [[2, -1], [-1, 1]]
    assert doc["eigenvalues"] == pytest.approx([0.381966011, 2.618033989], abs=1e-8)
    assert doc["algebraic_connectivity"] is None
    assert [b["id"] for b in doc["bounds"]] == ["eq8"]


def test_analyze_loopless_has_connectivity_and_eq2(tmp_path, capsys):
    path = tmp_path / "p3.el"
    path.write_text("3 2\n1 2\n2 3\n")
    code, out, _ = run_cli(capsys, "analyze", str(path), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["algebraic_connectivity"] == pytest.approx(1.0)
    assert [b["id"] for b in doc["bounds"]] == ["eq2", "eq3"]


def test_analyze_edgeless_two_vertices(tmp_path, capsys):
    path = tmp_path / "e2.el"
    path.write_text("2 0\n")
    code, out, _ = run_cli(capsys, "analyze", str(path), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["eigenvalues"] == [0.0, 0.0]


def test_analyze_malformed_line_names_it(tmp_path, capsys):
    path = tmp_path / "bad.el"
    path.write_text("2 1\n1 x\n")
    code, _, err = run_cli(capsys, "analyze", str(path))
    assert code == 2
    assert "line 2" in err


def test_missing_file_is_exit_2(capsys):
    code, _, err = run_cli(capsys, "verify", "/nonexistent/g.el")
    assert code == 2
    assert "error:" in err


def test_lift_writes_five_path(worked_file, tmp_path, capsys):
    out_path = tmp_path / "lifted.el"
    code, out, _ = run_cli(capsys, "lift", worked_file, str(out_path))
    assert code == 0
    assert out_path.read_text() == "5 4\n1 2\n1 3\n3 4\n4 5\n"
    doc = json.loads(out)
    assert doc["lifted_n"] == 5
    assert doc["middle"] == 3
    assert doc["lifted_edges"] == 4
    assert "note" not in doc


def test_lift_loopless_notes_isolated_middle(tmp_path, capsys):
    path = tmp_path / "p2.el"
    path.write_text("2 1\n1 2\n")
    out_path = tmp_path / "lifted.el"
    code, out, _ = run_cli(capsys, "lift", str(path), str(out_path))
    assert code == 0
    assert "isolated" in json.loads(out)["note"]


def test_verify_worked_example(worked_file, capsys):
    code, out, _ = run_cli(capsys, "verify", worked_file)
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"graph", "checks", "tolerances"}
    assert [c["id"] for c in doc["checks"]] == [
        "eq8",
        "lemma1",
        "eq6",
        "eq7",
        "lift-eigvec",
    ]
    assert all(c["pass"] for c in doc["checks"])


def test_verify_matches_library_report(worked_file, capsys):
    """The CLI is a thin adapter: same report as calling the library."""
    code, out, _ = run_cli(capsys, "verify", worked_file)
    assert code == 0
    cli_doc = json.loads(out)
    lib_doc = verify_all(read_edge_list(worked_file)).to_json_dict()
    assert [c["id"] for c in cli_doc["checks"]] == [c["id"] for c in lib_doc["checks"]]
    for got, want in zip(cli_doc["checks"], lib_doc["checks"]):
        assert got["pass"] == want["pass"]
        assert got["margin"] == pytest.approx(want["margin"], abs=1e-8)


def test_loopspec_tol_env_failure_path(worked_file, capsys, monkeypatch):
    monkeypatch.setenv("LOOPSPEC_TOL", "1e-300")
    code, out, _ = run_cli(capsys, "verify", worked_file)
    assert code == 1
    doc = json.loads(out)
    failed = [c["id"] for c in doc["checks"] if not c["pass"]]
    assert "eq6" in failed


def test_loopspec_tol_env_must_be_a_positive_number(worked_file, capsys, monkeypatch):
    monkeypatch.setenv("LOOPSPEC_TOL", "banana")
    code, _, err = run_cli(capsys, "verify", worked_file)
    assert code == 2
    assert "LOOPSPEC_TOL" in err
    monkeypatch.setenv("LOOPSPEC_TOL", "-1e-8")
    code, _, err = run_cli(capsys, "verify", worked_file)
    assert code == 2


def test_generate_is_deterministic(tmp_path, capsys):
    a = tmp_path / "a.el"
    b = tmp_path / "b.el"
    for out in (a, b):
        code, _, _ = run_cli(
            capsys,
            "generate",
            "--n", "6",
            "--p-edge", "0.5",
            "--p-loop", "0.4",
            "--seed", "42",
            "--out", str(out),
        )
        assert code == 0
    assert a.read_text() == b.read_text()


def test_generate_respects_constraint(tmp_path, capsys):
    out = tmp_path / "g.el"
    code, stdout, _ = run_cli(
        capsys,
        "generate",
        "--n", "5",
        "--p-edge", "0.3",
        "--p-loop", "0.3",
        "--seed", "7",
        "--require", "pseudo_connected",
        "--out", str(out),
    )
    assert code == 0
    doc = json.loads(stdout)
    assert doc["config"]["require"] == "pseudo_connected"
    g = read_edge_list(out)
    assert g.loop_count >= 1


def test_generate_unsatisfiable_is_exit_2(tmp_path, capsys):
    code, _, err = run_cli(
        capsys,
        "generate",
        "--n", "2",
        "--p-edge", "0",
        "--p-loop", "0",
        "--seed", "1",
        "--require", "pseudo_connected",
        "--out", str(tmp_path / "never.el"),
    )
    assert code == 2
    assert "pseudo_connected" in err


def test_generate_bad_probability_is_exit_2(tmp_path, capsys):
    code, _, err = run_cli(
        capsys,
        "generate",
        "--n", "2",
        "--p-edge", "1.5",
        "--p-loop", "0",
        "--seed", "1",
        "--out", str(tmp_path / "never.el"),
    )
    assert code == 2
    assert "p_edge" in err


def test_sweep_exhaustive_small(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--mode", "exhaustive", "--n-max", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["total"] == 74
    assert doc["passed"] == 74
    assert doc["failures"] == []


def test_sweep_exhaustive_cap(capsys):
    code, _, err = run_cli(capsys, "sweep", "--mode", "exhaustive", "--n-max", "6")
    assert code == 2
    assert "capped" in err


def test_sweep_zero_samples(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "--mode", "random", "--n-max", "4", "--samples", "0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["total"] == 0 and doc["passed"] == 0


def test_sweep_random_small(capsys):
    code, out, _ = run_cli(
        capsys,
        "sweep",
        "--mode", "random",
        "--n-max", "6",
        "--n-min", "2",
        "--samples", "20",
        "--seed", "11",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["total"] == 20
    assert doc["passed"] + len(doc["failures"]) == doc["total"]


def test_sweep_bad_range(capsys):
    code, _, err = run_cli(
        capsys, "sweep", "--mode", "random", "--n-max", "3", "--n-min", "9"
    )
    assert code == 2
    assert "n-min" in err


def test_run_sweep_is_deterministic():
    a = run_sweep(mode="random", n_max=5, samples=15, seed=3)
    b = run_sweep(mode="random", n_max=5, samples=15, seed=3)
    assert a == b


def test_console_script_round_trip(tmp_path):
    """End-to-end through the real process boundary."""
    path = tmp_path / "worked.el"
    path.write_text(WORKED)
    proc = subprocess.run(
        [sys.executable, "-m", "loopspec.cli", "verify", str(path)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert all(c["pass"] for c in doc["checks"])


def test_usage_error_exits_2():
    proc = subprocess.run(
        [sys.executable, "-m", "loopspec.cli", "frobnicate"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
