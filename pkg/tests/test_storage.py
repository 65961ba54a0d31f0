"""
Tests for artifact storage and run manifests.
"""

import json
import os

import numpy as np
import pandas as pd
import pytest

from src.enums import RunStatus
from src.services.storage import StorageManager, read_csv, read_json, sha256_of, write_csv
from src.services.storage.config import DENSITY_COLUMNS, MANIFEST_NAME
from src.utils import ErrorCode, StorageError


def test_csv_round_trip_is_exact(out_dir):
    values = np.random.default_rng(0).normal(size=50) * 1e-3 + np.pi
    path = os.path.join(out_dir, "density.csv")
    write_csv(path, pd.DataFrame({"lambda": values, "rho": values ** 2}))
    frame = read_csv(path)
    assert list(frame.columns) == DENSITY_COLUMNS
    assert np.array_equal(frame["lambda"].to_numpy(), values)
    assert np.array_equal(frame["rho"].to_numpy(), values ** 2)


def test_missing_values_written_as_empty_fields(out_dir):
    path = os.path.join(out_dir, "phase.csv")
    write_csv(path, pd.DataFrame({"g": [-1.0], "a1": [None]}))
    with open(path) as handle:
        assert handle.read().splitlines()[1] == "-1,"


def test_writes_leave_no_temporary_files(out_dir):
    storage = StorageManager(out_dir, run_id="run-1")
    storage.write_json("solution.json", {"g": -7.0})
    storage.write_bytes("state.bin", b"\x00\x01")
    assert sorted(os.listdir(out_dir)) == ["solution.json", "state.bin"]


def test_manifest_lists_outputs_with_digests(out_dir):
    storage = StorageManager(out_dir, run_id="run-2")
    storage.write_csv("density.csv", {"lambda": [0.0, 1.0], "rho": [0.5, 0.5]})
    storage.write_json("solution.json", {"status": "completed"})
    storage.write_json("solution.json", {"status": "partial"})
    manifest = storage.write_manifest("equilibrium", {"g": -7.0}, seeds=[3], status=RunStatus.PARTIAL)

    assert [r.path for r in manifest.outputs] == ["density.csv", "solution.json"]
    on_disk = read_json(os.path.join(out_dir, MANIFEST_NAME))
    assert on_disk["run_id"] == "run-2"
    assert on_disk["status"] == "partial"
    assert on_disk["seeds"] == [3]
    for record in on_disk["outputs"]:
        assert record["sha256"] == sha256_of(os.path.join(out_dir, record["path"]))


def test_json_is_sorted_and_handles_numpy(out_dir):
    storage = StorageManager(out_dir)
    storage.write_json("values.json", {"b": np.float64(1.5), "a": np.arange(3)})
    with open(os.path.join(out_dir, "values.json")) as handle:
        text = handle.read()
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [0, 1, 2], "b": 1.5}


def test_register_external_file(out_dir):
    storage = StorageManager(out_dir)
    with open(storage.path("external.bin"), "wb") as handle:
        handle.write(b"abc")
    record = storage.register("external.bin")
    assert record.size_bytes == 3
    with pytest.raises(StorageError):
        storage.register("missing.bin")


def test_read_missing_csv(out_dir):
    with pytest.raises(StorageError) as exc_info:
        read_csv(os.path.join(out_dir, "absent.csv"))
    assert exc_info.value.code is ErrorCode.ARTIFACT_READ_ERROR


def test_default_output_directory(settings):
    storage = StorageManager()
    assert storage.out_dir == settings.OUTPUT_DIR
    assert os.path.isdir(settings.OUTPUT_DIR)
