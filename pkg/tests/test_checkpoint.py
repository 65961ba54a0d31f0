"""
Tests for the binary eigenvalue checkpoint format.
"""

import os
import struct

import numpy as np
import pytest

from src.services.montecarlo.checkpoint import (
    decode_checkpoint,
    encode_checkpoint,
    metadata_path,
    read_checkpoint,
    write_checkpoint,
)
from src.utils import ErrorCode, SamplingError


def test_layout_is_little_endian_count_then_values():
    data = encode_checkpoint([1.5, -2.0])
    assert len(data) == 8 + 2 * 8
    assert struct.unpack("<Q", data[:8]) == (2,)
    assert struct.unpack("<2d", data[8:]) == (1.5, -2.0)


def test_write_and_read(out_dir):
    path = os.path.join(out_dir, "final_state.bin")
    values = np.array([-0.75, 0.1, 0.65])
    write_checkpoint(path, values, {"model": "01", "g": -7.0, "seed": 5})
    loaded, metadata = read_checkpoint(path)
    assert np.array_equal(loaded, values)
    assert metadata == {"model": "01", "g": -7.0, "seed": 5, "n": 3}


def test_missing_sidecar_gives_empty_metadata(out_dir):
    path = os.path.join(out_dir, "state.bin")
    write_checkpoint(path, [0.0, 1.0], {})
    os.remove(metadata_path(path))
    _, metadata = read_checkpoint(path)
    assert metadata == {}


@pytest.mark.parametrize("data", [b"\x01\x00", encode_checkpoint([1.0, 2.0])[:-3], encode_checkpoint([1.0]) + b"\x00"])
def test_malformed_data(data):
    with pytest.raises(SamplingError) as exc_info:
        decode_checkpoint(data)
    assert exc_info.value.code is ErrorCode.CHECKPOINT_ERROR


def test_missing_file(out_dir):
    with pytest.raises(SamplingError) as exc_info:
        read_checkpoint(os.path.join(out_dir, "absent.bin"))
    assert exc_info.value.code is ErrorCode.CHECKPOINT_ERROR
