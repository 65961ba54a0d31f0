"""
Tests for the fuzzy-spectra command line.
"""

import json
import os

import numpy as np
import pandas as pd
import pytest

from config.config import get_settings
from src.main import main
from src.services.storage import read_csv, read_json, write_csv

from conftest import CRITICAL_01


def outputs_of(directory):
    return sorted(record["path"] for record in read_json(os.path.join(directory, "manifest.json"))["outputs"])


def test_critical_minus_model(out_dir, capsys):
    assert main(["critical", "--model", "01", "--out", out_dir]) == 0
    assert json.loads(capsys.readouterr().out)["critical"] == CRITICAL_01
    assert read_json(os.path.join(out_dir, "critical.json"))["critical"] == CRITICAL_01
    assert outputs_of(out_dir) == ["critical.json"]


def test_critical_gaussian_baseline_is_a_domain_error(out_dir):
    assert main(["critical", "--model", "gue", "--out", out_dir]) == 4
    manifest = read_json(os.path.join(out_dir, "manifest.json"))
    assert manifest["status"] == "failed"


def test_equilibrium_needs_coupling(out_dir):
    assert main(["equilibrium", "--model", "01", "--out", out_dir]) == 2


def test_equilibrium_two_cut(out_dir):
    assert main(["equilibrium", "--model", "01", "--g", "-7", "--samples", "101", "--out", out_dir]) == 0
    solution = read_json(os.path.join(out_dir, "solution.json"))
    assert solution["chosen"]["ansatz"] == "sym2"
    assert not solution["broken_symmetry"]
    density = read_csv(os.path.join(out_dir, "density.csv"))
    assert list(density.columns) == ["lambda", "rho"]
    assert len(density) == 101
    assert outputs_of(out_dir) == ["density.csv", "solution.json"]


def test_mc_run_and_restart_from_checkpoint(tmp_path):
    first = str(tmp_path / "first")
    args = ["mc", "--model", "10", "--g", "-4", "--N", "4", "--sweeps", "60", "--burnin", "20", "--seed", "3"]
    assert main(args + ["--out", first]) == 0
    assert outputs_of(first) == [
        "final_state.bin", "final_state.bin.meta.json", "histogram.csv", "mc_summary.json", "trace.csv",
    ]
    trace = read_csv(os.path.join(first, "trace.csv"))
    assert list(trace.columns) == ["sweep", "M", "m2", "energy", "acceptance"]
    assert len(trace) == 4
    manifest = read_json(os.path.join(first, "manifest.json"))
    assert manifest["seeds"] == [3]

    second = str(tmp_path / "second")
    checkpoint = os.path.join(first, "final_state.bin")
    assert main(args + ["--init", f"file:{checkpoint}", "--out", second]) == 0
    assert read_json(os.path.join(second, "mc_summary.json"))["init"] == "explicit"


def test_mc_rejects_unknown_initialisation(out_dir):
    assert main(["mc", "--model", "10", "--N", "4", "--init", "random", "--out", out_dir]) == 2


def test_mc_checkpoint_of_wrong_size(tmp_path):
    first = str(tmp_path / "first")
    assert main(["mc", "--model", "01", "--g", "-2", "--N", "4", "--sweeps", "30", "--burnin", "10", "--out", first]) == 0
    checkpoint = os.path.join(first, "final_state.bin")
    code = main([
        "mc", "--model", "01", "--g", "-2", "--N", "6", "--sweeps", "30", "--burnin", "10",
        "--init", f"file:{checkpoint}", "--out", str(tmp_path / "second"),
    ])
    assert code == 2


def test_compare_identical_files(tmp_path, out_dir):
    x = np.linspace(-1.0, 1.0, 21)
    rho = 0.75 * (1.0 - x ** 2)
    theory, histogram = str(tmp_path / "theory.csv"), str(tmp_path / "histogram.csv")
    write_csv(theory, pd.DataFrame({"lambda": x, "rho": rho}))
    write_csv(histogram, pd.DataFrame({"bin_center": x, "density": rho}))
    assert main(["compare", theory, histogram, "--out", out_dir]) == 0
    metrics = read_json(os.path.join(out_dir, "comparison.json"))
    assert metrics["l1"] == 0.0
    assert metrics["resampled"] is False


def test_compare_rejects_wrong_columns(tmp_path, out_dir):
    path = str(tmp_path / "theory.csv")
    write_csv(path, pd.DataFrame({"x": [0.0, 1.0], "y": [1.0, 1.0]}))
    assert main(["compare", path, path, "--out", out_dir]) == 2


def test_dirac_gaussian_baseline(out_dir):
    assert main(["dirac", "--model", "gue", "--sign", "-", "--out", out_dir]) == 0
    frame = read_csv(os.path.join(out_dir, "dirac.csv"))
    assert list(frame.columns) == ["s", "density"]
    assert outputs_of(out_dir) == ["dirac.csv", "dirac.json"]


def test_unknown_model_is_an_argument_error():
    with pytest.raises(SystemExit) as exc_info:
        main(["critical", "--model", "11"])
    assert exc_info.value.code == 2


def test_log_level_is_case_insensitive(out_dir):
    assert main(["critical", "--model", "01", "--out", out_dir, "--log-level", "debug"]) == 0


def test_unknown_log_level_is_an_argument_error(out_dir):
    with pytest.raises(SystemExit) as exc_info:
        main(["critical", "--model", "01", "--out", out_dir, "--log-level", "loud"])
    assert exc_info.value.code == 2


def test_invalid_settings_exit_with_usage_code(monkeypatch, out_dir):
    monkeypatch.setenv("NEWTON_FD_STEP", "0")
    get_settings.cache_clear()
    assert main(["critical", "--model", "01", "--out", out_dir]) == 2


def test_scan_minus_model(out_dir):
    args = ["scan", "--model", "01", "--g-from", "-5", "--g-to", "-6.5", "--step", "-0.5", "--out", out_dir]
    assert main(args) == 0
    phase = read_csv(os.path.join(out_dir, "phase.csv"))
    assert list(phase["ansatz"]) == ["sym1", "sym1", "sym2", "sym2"]
    assert phase["chosen"].all()
    assert read_json(os.path.join(out_dir, "scan.json"))["critical"] == [CRITICAL_01]


def test_scan_step_pointing_away(out_dir):
    args = ["scan", "--model", "01", "--g-from", "-5", "--g-to", "-6", "--step", "0.5", "--out", out_dir]
    assert main(args) == 2
