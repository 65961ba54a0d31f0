"""
Binary eigenvalue checkpoints with a JSON metadata sidecar.
"""

import os
from typing import Any, Dict, Tuple

import numpy as np

from src.services.montecarlo.config import (
    CHECKPOINT_HEADER_DTYPE,
    CHECKPOINT_METADATA_SUFFIX,
    CHECKPOINT_VALUE_DTYPE,
)
from src.services.storage import atomic_write_bytes, read_json, write_json
from src.utils import ErrorCode, SamplingError, StorageError

HEADER_BYTES = np.dtype(CHECKPOINT_HEADER_DTYPE).itemsize


def metadata_path(path: str) -> str:
    return path + CHECKPOINT_METADATA_SUFFIX


def encode_checkpoint(values) -> bytes:
    values = np.asarray(values, dtype=CHECKPOINT_VALUE_DTYPE).ravel()
    header = np.array([values.size], dtype=CHECKPOINT_HEADER_DTYPE)
    return header.tobytes() + values.tobytes()


def decode_checkpoint(data: bytes) -> np.ndarray:
    """
    Raises:
        SamplingError: truncated data or a size that disagrees with the header
    """
    if len(data) < HEADER_BYTES:
        raise SamplingError(
            "Checkpoint is shorter than its header",
            code=ErrorCode.CHECKPOINT_ERROR,
            details={"bytes": len(data)}
        )
    n = int(np.frombuffer(data[:HEADER_BYTES], dtype=CHECKPOINT_HEADER_DTYPE)[0])
    expected = HEADER_BYTES + n * np.dtype(CHECKPOINT_VALUE_DTYPE).itemsize
    if len(data) != expected:
        raise SamplingError(
            "Checkpoint size does not match its header",
            code=ErrorCode.CHECKPOINT_ERROR,
            details={"n": n, "bytes": len(data), "expected": expected}
        )
    return np.frombuffer(data[HEADER_BYTES:], dtype=CHECKPOINT_VALUE_DTYPE).astype(float)


def write_checkpoint(path: str, values, metadata: Dict[str, Any]) -> None:
    """Eigenvalues to `path`, metadata (model, g, sweeps, seed) to the sidecar."""
    atomic_write_bytes(path, encode_checkpoint(values))
    write_json(metadata_path(path), dict(metadata, n=int(np.size(values))))


def read_checkpoint(path: str) -> Tuple[np.ndarray, Dict[str, Any]]:
    """
    Eigenvalues and metadata; the metadata is empty when the sidecar is missing.

    Raises:
        SamplingError: unreadable or malformed checkpoint
    """
    try:
        with open(path, "rb") as handle:
            values = decode_checkpoint(handle.read())
    except OSError as e:
        raise SamplingError(
            f"Cannot read checkpoint {path}",
            code=ErrorCode.CHECKPOINT_ERROR,
            original_exception=e
        )
    metadata: Dict[str, Any] = {}
    if os.path.exists(metadata_path(path)):
        try:
            metadata = read_json(metadata_path(path))
        except StorageError as e:
            raise SamplingError(
                f"Cannot read checkpoint metadata for {path}",
                code=ErrorCode.CHECKPOINT_ERROR,
                original_exception=e
            )
    return values, metadata
