"""Command-line front end: verbs, formats, config defaults, exit codes."""

import json

import pytest

from spochar.cli import main
from spochar.verify import CheckReport


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_compute_mixed_alphabet(capsys):
    code, out = run(capsys, "compute", "--family", "sp", "--n", "1", "--m", "1", "--outer", "1")
    assert code == 0
    assert out.strip() == "z1 + x1 + x1^-1"


def test_compute_pure_pairs(capsys):
    code, out = run(capsys, "compute", "--family", "sp", "--n", "1", "--m", "0", "--outer", "1")
    assert code == 0
    assert out.strip() == "x1 + x1^-1"


def test_compute_empty_shape(capsys):
    code, out = run(capsys, "compute", "--family", "sp", "--n", "0", "--m", "0", "--outer", "")
    assert code == 0
    assert out.strip() == "1"


def test_compute_skew(capsys):
    code, out = run(
        capsys, "compute", "--family", "o", "--n", "1", "--m", "0",
        "--outer", "2,1", "--inner", "1",
    )
    assert code == 0
    assert out.strip() == "x1^2 + 2 + x1^-2"


def test_compute_json_schema(capsys):
    code, out = run(
        capsys, "compute", "--family", "sp", "--n", "1", "--m", "1",
        "--outer", "1", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["text"] == "z1 + x1 + x1^-1"
    # big integers travel as decimal strings
    assert all(isinstance(t["coeff"], str) for t in doc["result"])


def test_gt_count(capsys):
    code, out = run(capsys, "gt", "--lambda", "1", "--n", "1", "--count")
    assert code == 0
    assert out.strip() == "3"


def test_gt_listing_shows_weights(capsys):
    code, out = run(capsys, "gt", "--lambda", "1", "--n", "1")
    assert code == 0
    lines = [l for l in out.splitlines() if "->" in l]
    assert len(lines) == 3
    assert any("weight x2" in l for l in lines)
    assert any("weight x1^-1" in l for l in lines)


def test_fock_pairing(capsys):
    code, out = run(capsys, "fock", "--pairing", "--mu", "2,1", "--lambda", "2,1")
    assert code == 0
    assert out.strip() == "1"


def test_fock_pairing_mismatch(capsys):
    code, out = run(capsys, "fock", "--pairing", "--mu", "2", "--lambda", "1,1")
    assert code == 0
    assert out.strip() == "0"


def test_fock_matrix_element(capsys):
    code, out = run(
        capsys, "fock", "--matrix-element", "--beta", "", "--alpha", "1",
        "--n", "1", "--m", "0", "--family", "sp",
    )
    assert code == 0
    assert out.strip() == "x1 + x1^-1"


def test_newton_pass(capsys):
    code, out = run(capsys, "newton", "--n", "1", "--m", "1", "--N", "4")
    assert code == 0
    assert out.strip() == "pass"


def test_verify_single_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "newton")
    assert code == 0
    assert "newton" in out and "PASS" in out


def test_verify_json_report(capsys):
    code, out = run(capsys, "verify", "--suite", "newton", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["reports"][0]["check_name"] == "newton"
    assert doc["reports"][0]["passed"] is True


def test_verify_inline_grid(capsys):
    grid = {"n_range": [0, 1], "m_range": [0, 1], "max_weight": 2,
            "max_len": 2, "degree_cap": 2}
    code, out = run(capsys, "verify", "--suite", "orthonormality", "--grid", json.dumps(grid))
    assert code == 0
    assert "PASS" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    import spochar.cli as cli

    def fake(name, grid=None):
        return CheckReport(name, 1, [("case", "1", "0")], [])

    monkeypatch.setattr(cli, "run_suite", fake)
    code, out = run(capsys, "verify", "--suite", "newton")
    assert code == 1
    assert "FAIL" in out


def test_usage_errors_exit_2(capsys):
    assert main(["compute", "--family", "bogus", "--n", "1", "--m", "0", "--outer", "1"]) == 2
    capsys.readouterr()
    assert main(["nonsense"]) == 2
    capsys.readouterr()
    # malformed partition flag
    assert main(["compute", "--family", "sp", "--n", "1", "--m", "0", "--outer", "2,x"]) == 2
    capsys.readouterr()


def test_config_file_supplies_defaults(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": "sp", "n": 1, "m": 0}))
    code, out = run(capsys, "compute", "--config", str(cfg), "--outer", "1")
    assert code == 0
    assert out.strip() == "x1 + x1^-1"


def test_flags_override_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": "sp", "n": 1, "m": 0}))
    code, out = run(capsys, "compute", "--config", str(cfg), "--outer", "1", "--m", "1")
    assert code == 0
    assert out.strip() == "z1 + x1 + x1^-1"


def test_output_is_stable_across_runs(capsys):
    args = ("compute", "--family", "o", "--n", "2", "--m", "1", "--outer", "2,1")
    _, first = run(capsys, *args)
    _, second = run(capsys, *args)
    assert first == second
