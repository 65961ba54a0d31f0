"""
Artifact storage: atomic CSV/JSON/binary writes and run manifests.
"""

from src.services.storage.storage_manager import StorageManager
from src.services.storage.file_store import (
    atomic_write_bytes,
    atomic_write_text,
    read_csv,
    read_json,
    sha256_of,
    write_csv,
    write_json,
)

__all__ = [
    "StorageManager",
    "atomic_write_bytes",
    "atomic_write_text",
    "read_csv",
    "read_json",
    "sha256_of",
    "write_csv",
    "write_json",
]
