"""
Atomic file writes and readers for CSV, JSON and binary artifacts.
"""

import hashlib
import json
import os
import tempfile
from typing import Any

import pandas as pd

from src.services.storage.config import CSV_FLOAT_FORMAT, CSV_NA_REP, HASH_CHUNK_BYTES, TEMP_SUFFIX
from src.utils import ErrorCode, StorageError, get_logger
from src.utils.logging_utils import json_default

logger = get_logger(__name__)


def atomic_write_bytes(path: str, data: bytes) -> None:
    """
    Write `data` to a temporary file next to `path`, then rename it into place.

    Raises:
        StorageError: the file could not be written
    """
    directory = os.path.dirname(os.path.abspath(path))
    try:
        os.makedirs(directory, exist_ok=True)
        fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=TEMP_SUFFIX)
        try:
            with os.fdopen(fd, "wb") as handle:
                handle.write(data)
                handle.flush()
                os.fsync(handle.fileno())
            os.replace(tmp_path, path)
        except BaseException:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise
    except OSError as e:
        raise StorageError(
            f"Failed to write {path}",
            code=ErrorCode.ARTIFACT_WRITE_ERROR,
            details={"path": path},
            original_exception=e
        )
    logger.debug(f"Wrote {len(data)} bytes to {path}")


def atomic_write_text(path: str, text: str) -> None:
    atomic_write_bytes(path, text.encode("utf-8"))


def dumps_json(obj: Any) -> str:
    """JSON with sorted keys; numpy values and enums serialised."""
    return json.dumps(obj, sort_keys=True, indent=2, default=json_default) + "\n"


def write_json(path: str, obj: Any) -> None:
    atomic_write_text(path, dumps_json(obj))


def write_csv(path: str, frame: pd.DataFrame) -> None:
    text = frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, na_rep=CSV_NA_REP, lineterminator="\n")
    atomic_write_text(path, text)


def read_csv(path: str) -> pd.DataFrame:
    """
    Raises:
        StorageError: missing or unreadable file
    """
    try:
        return pd.read_csv(path, float_precision="round_trip")
    except (OSError, ValueError) as e:
        raise StorageError(
            f"Failed to read {path}",
            code=ErrorCode.ARTIFACT_READ_ERROR,
            details={"path": path},
            original_exception=e
        )


def read_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, ValueError) as e:
        raise StorageError(
            f"Failed to read {path}",
            code=ErrorCode.ARTIFACT_READ_ERROR,
            details={"path": path},
            original_exception=e
        )


def sha256_of(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(HASH_CHUNK_BYTES), b""):
            digest.update(chunk)
    return digest.hexdigest()
