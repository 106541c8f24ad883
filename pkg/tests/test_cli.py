"""End-to-end tests for the command-line interface."""

import json
import os
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "cybundle.cli"]

SO10_MODEL = {
    "base": "F0",
    "bundle": {
        "type": "pullback",
        "n": 3,
        "c2E": 104,
        "twist": {"x": "1", "alpha": {"coeffs": ["-1", "-1"]}},
    },
    "polarization": {"h": "1"},
    "require": "W_zero",
}

BAD_PARITY_MODEL = {
    "base": "F0",
    "bundle": {
        "type": "spectral",
        "n": 2,
        "eta": {"coeffs": ["24", "24"]},
        "lambda": "1",
        "twist": {"x": "0", "alpha": {"coeffs": ["1", "-11"]}},
    },
    "polarization": {"H": {"coeffs": ["3", "34"]}},
}

E6_CONFIG = {
    "base": "F0",
    "mode": "pullback",
    "n_range": [2, 2],
    "x_values": [2],
    "alpha_box": [[0, 0], [0, 0]],
    "c2E_range": [92, 92],
    "h_values": ["1"],
    "require": "W_zero",
}


def run_cli(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, env=full_env
    )


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_verify_paper_passes():
    proc = run_cli("verify-paper")
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "all hard checks passed" in proc.stdout
    assert "af readings reported" in proc.stdout  # informational fixture present


def test_check_passing_model(tmp_path):
    proc = run_cli("check", write(tmp_path, "so10.json", SO10_MODEL))
    assert proc.returncode == 0, proc.stdout + proc.stderr
    record = json.loads(proc.stdout)
    assert record["overall"] is True
    assert record["verdicts"]["anomaly"]["W_zero"] is True


def test_check_parity_failure(tmp_path):
    proc = run_cli("check", write(tmp_path, "bad.json", BAD_PARITY_MODEL))
    assert proc.returncode == 1
    record = json.loads(proc.stdout)
    assert record["failed_stage"] == "validity"
    assert record["verdicts"]["validity"]["error"] == "spectral data invalid"


def test_check_truncated_file(tmp_path):
    path = tmp_path / "trunc.json"
    path.write_text(json.dumps(SO10_MODEL)[:40])
    proc = run_cli("check", str(path))
    assert proc.returncode == 2
    assert "error" in proc.stderr


def test_check_missing_field_names_it(tmp_path):
    broken = {
        "base": "F0",
        "bundle": {
            "type": "pullback",
            "n": 3,
            "twist": {"x": "1", "alpha": {"coeffs": ["-1", "-1"]}},
        },
    }
    proc = run_cli("check", write(tmp_path, "broken.json", broken))
    assert proc.returncode == 2
    assert "c2E" in proc.stderr


def test_check_unsupported_base(tmp_path):
    model = dict(SO10_MODEL, base="F2")
    proc = run_cli("check", write(tmp_path, "f2.json", model))
    assert proc.returncode == 2
    assert "unsupported surface" in proc.stderr


def test_search_e6_singleton(tmp_path):
    proc = run_cli("search", write(tmp_path, "e6.json", E6_CONFIG))
    assert proc.returncode == 0, proc.stderr
    lines = [l for l in proc.stdout.splitlines() if l and not l.startswith("#")]
    assert len(lines) == 1
    record = json.loads(lines[0])
    assert record["verdicts"]["anomaly"]["W_zero"] is True
    summary = json.loads(proc.stderr.strip().splitlines()[-1])
    assert summary["scanned"] == 1


def test_search_jobs_deterministic(tmp_path):
    config = {
        "base": "F0",
        "mode": "pullback",
        "n_range": [2, 3],
        "x_values": [1, 2],
        "alpha_box": [[-2, 0], [-2, 0]],
        "c2E_range": [100, 106],
        "h_values": ["1"],
    }
    cfg = write(tmp_path, "box.json", config)
    out1, out8 = str(tmp_path / "a.jsonl"), str(tmp_path / "b.jsonl")
    assert run_cli("search", cfg, "--jobs", "1", "--out", out1).returncode == 0
    assert run_cli("search", cfg, "--jobs", "8", "--out", out8).returncode == 0
    with open(out1, "rb") as f1, open(out8, "rb") as f8:
        assert f1.read() == f8.read()


def test_search_limit(tmp_path):
    config = {
        "base": "F0",
        "mode": "pullback",
        "n_range": [2, 4],
        "x_values": [1],
        "alpha_box": [[-1, 1], [-1, 1]],
        "c2E_range": [0, 9],
        "h_values": ["1"],
    }
    proc = run_cli("search", write(tmp_path, "big.json", config), "--limit", "5")
    assert proc.returncode == 0
    lines = [l for l in proc.stdout.splitlines() if l and not l.startswith("#")]
    assert len(lines) == 5


def test_search_invalid_config(tmp_path):
    proc = run_cli("search", write(tmp_path, "bad.json", {"base": "F0"}))
    assert proc.returncode == 2


def test_env_bound_must_be_integer(tmp_path):
    proc = run_cli(
        "check",
        write(tmp_path, "so10.json", SO10_MODEL),
        env={"CYBUNDLE_BOUND": "many"},
    )
    assert proc.returncode == 2


def test_env_bound_accepted(tmp_path):
    proc = run_cli(
        "check",
        write(tmp_path, "so10.json", SO10_MODEL),
        env={"CYBUNDLE_BOUND": "20"},
    )
    assert proc.returncode == 0


def test_rationals_serialize_exactly(tmp_path):
    # numeric window endpoints travel as exact "p/q" strings; decimals only
    # ever appear under an _approx suffix
    from fractions import Fraction

    proc = run_cli("check", write(tmp_path, "so10.json", SO10_MODEL))
    record = json.loads(proc.stdout)
    window = record["verdicts"]["stability"]
    assert isinstance(window["lower"], str)
    assert Fraction(window["lower"]) < Fraction(window["upper"])
    assert "z_interval_approx" in window
