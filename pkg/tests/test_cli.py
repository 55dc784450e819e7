import json
import os
import subprocess
import sys
from pathlib import Path

from charbound.cli import main

SRC = Path(__file__).resolve().parent.parent / "src"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- bound ---------------------------------------------------------------------


def test_bound_betti_golden(capsys):
    code, out, _ = run(capsys, "bound", "--betti", "-n", "2", "-d", "2")
    assert code == 0
    assert out == "512\n"


def test_bound_pontryagin_golden(capsys):
    code, out, _ = run(capsys, "bound", "--pontryagin", "-n", "2", "-d", "2")
    assert code == 0
    assert out == "8192\n"


def test_bound_cin_golden(capsys):
    code, out, _ = run(capsys, "bound", "--cin", "-n", "2", "-d", "2", "-I", "2")
    assert code == 0
    assert out == "128\n"


def test_bound_ci(capsys):
    code, out, _ = run(capsys, "bound", "--ci", "-n", "2", "-d", "3", "-I", "2")
    assert code == 0
    assert out == "27\n"


def test_bound_usage_errors(capsys):
    code, _, err = run(capsys, "bound", "--betti", "--ci", "-n", "2", "-d", "2")
    assert code == 2
    code, _, _ = run(capsys, "bound", "--betti", "-n", "2")  # missing -d
    assert code == 2
    code, _, err = run(capsys, "bound", "--cin", "-n", "2", "-d", "2")  # missing -I
    assert code == 2
    assert "multi-index" in err


# -- verify ---------------------------------------------------------------------


def test_verify_small_grid_passes(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--max-ambient-dim", "4",
        "--max-degree", "3",
        "--max-cases", "100",
    )
    assert code == 0
    assert "violations=0" in out


def test_verify_default_grid_all_checks_pass(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "cases=500" in out
    assert "truncated=true" in out
    assert "violations=0" in out


def test_verify_writes_deterministic_json(tmp_path, capsys):
    grid = tmp_path / "grid.json"
    grid.write_text(
        json.dumps(
            {
                "max_ambient_dim": 4,
                "max_degree_per_factor": 2,
                "max_codim": 2,
                "checks": ["degree-sequence", "betti", "euler"],
                "max_cases": 50,
            }
        )
    )
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    code, _, _ = run(capsys, "verify", "--grid", str(grid), "--out", str(out1))
    assert code == 0
    code, _, _ = run(capsys, "verify", "--grid", str(grid), "--out", str(out2))
    assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    payload = json.loads(out1.read_text())
    assert payload["violations"] == 0
    assert payload["grid"]["max_ambient_dim"] == 4


def test_verify_csv_format(tmp_path, capsys):
    out = tmp_path / "r.csv"
    code, _, _ = run(
        capsys,
        "verify",
        "--max-ambient-dim", "3",
        "--max-degree", "2",
        "--checks", "betti,euler",
        "--out", str(out),
        "--format", "csv",
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "subject,n,d,multidegree,index,exact,bound,satisfied,margin"
    assert len(lines) > 1


def test_verify_markdown_to_stdout(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--max-ambient-dim", "3",
        "--max-degree", "2",
        "--checks", "betti",
        "--format", "markdown",
    )
    assert code == 0
    assert out.startswith("| subject |")


def test_verify_malformed_grid_json(tmp_path, capsys):
    grid = tmp_path / "bad.json"
    grid.write_text("{not json")
    code, _, err = run(capsys, "verify", "--grid", str(grid))
    assert code == 2
    assert "error" in err


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--checks", "bogus")
    assert code == 2
    assert "unknown checks" in err


def test_verify_env_var_overrides_cap(capsys, monkeypatch):
    monkeypatch.setenv("CHARBOUND_MAX_CASES", "3")
    code, out, _ = run(capsys, "verify", "--checks", "betti")
    assert code == 0
    assert "cases=3" in out


def test_verify_env_var_must_be_integer(capsys, monkeypatch):
    monkeypatch.setenv("CHARBOUND_MAX_CASES", "many")
    code, _, err = run(capsys, "verify", "--checks", "betti")
    assert code == 2


def test_verify_signature_satisfied(capsys):
    code, out, _ = run(capsys, "verify", "--sigma", "0", "-m", "5", "-D", "2")
    assert code == 0
    assert "c2^2=98" in out
    assert "margin=98" in out


def test_verify_signature_violation_exits_one(capsys):
    code, out, _ = run(capsys, "verify", "--sigma", "33", "-m", "5", "-D", "2")
    assert code == 1
    assert "VIOLATION" in out
    assert "exact=99" in out
    assert "bound=98" in out


def test_verify_signature_needs_fourfold(capsys):
    code, _, err = run(capsys, "verify", "--sigma", "0", "-m", "3", "-D", "2")
    assert code == 2
    assert "4-dimensional" in err


def test_verify_signature_from_variety_file(tmp_path, capsys):
    spec = tmp_path / "v.json"
    spec.write_text(json.dumps({"ambient_dim": 5, "multidegree": [2]}))
    code, out, _ = run(capsys, "verify", "--sigma", "0", "--variety", str(spec))
    assert code == 0
    assert "satisfied" in out


# -- table ------------------------------------------------------------------------


def test_table_quadric_surface(capsys):
    code, out, _ = run(capsys, "table", "-m", "3", "-D", "2")
    assert code == 0
    assert "chi: 4" in out
    assert "betti: (1, 0, 2, 0, 1)" in out
    assert "degree_sequence: (2, 4, 8)" in out


def test_table_quartic_surface(capsys):
    code, out, _ = run(capsys, "table", "-m", "3", "-D", "4")
    assert code == 0
    assert "chi: 24" in out


def test_table_intersection_of_quadrics(capsys):
    code, out, _ = run(capsys, "table", "-m", "4", "-D", "2,2")
    assert code == 0
    assert "degree_sequence: (4, 12, 36)" in out


def test_table_quantity_selection(capsys):
    code, out, _ = run(capsys, "table", "-m", "3", "-D", "2", "--quantities", "chi")
    assert code == 0
    assert "chi: 4" in out
    assert "betti_bound" not in out


def test_table_invalid_spec(capsys):
    code, _, _ = run(capsys, "table", "-m", "3", "-D", "0")
    assert code == 2
    code, _, _ = run(capsys, "table", "-m", "3")
    assert code == 2


# -- schubert -----------------------------------------------------------------------


def test_schubert_power_golden(capsys):
    code, out, _ = run(capsys, "schubert", "-q", "2", "-N", "4", "--power", "sigma1^4")
    assert code == 0
    assert out == "2\n"


def test_schubert_giambelli(capsys):
    code, out, _ = run(capsys, "schubert", "-q", "2", "-N", "4", "--giambelli", "1,1")
    assert code == 0
    assert out == "sigma[1,1]\n"


def test_schubert_degree(capsys):
    code, out, _ = run(capsys, "schubert", "-q", "1", "-N", "3", "--degree")
    assert code == 0
    assert out == "1\n"


def test_schubert_partial_power_prints_expansion(capsys):
    code, out, _ = run(capsys, "schubert", "-q", "2", "-N", "4", "--power", "sigma1^2")
    assert code == 0
    assert out == "sigma[1,1] + sigma[2]\n"


def test_schubert_box_violation_exits_one(capsys):
    code, _, err = run(capsys, "schubert", "-q", "2", "-N", "4", "--giambelli", "5,1")
    assert code == 1
    assert "box" in err


def test_schubert_vanishing_special_class_exits_one(capsys):
    code, _, err = run(capsys, "schubert", "-q", "2", "-N", "4", "--power", "sigma3")
    assert code == 1


def test_schubert_bad_power_spec(capsys):
    code, _, _ = run(capsys, "schubert", "-q", "2", "-N", "4", "--power", "tau1^4")
    assert code == 2


def test_module_entry_point():
    env = dict(os.environ, PYTHONPATH=str(SRC))
    proc = subprocess.run(
        [sys.executable, "-m", "charbound", "bound", "--betti", "-n", "2", "-d", "2"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout == "512\n"
