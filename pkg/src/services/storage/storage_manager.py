"""
Storage manager for the artifacts of one command run.
"""

import os
import time
import uuid
from datetime import datetime, timezone
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

import pandas as pd

from config.config import get_settings
from src.enums import RunStatus, StorageStatus
from src.models import ArtifactRecord, RunManifest
from src.services.storage.config import MANIFEST_NAME
from src.services.storage.file_store import (
    atomic_write_bytes,
    sha256_of,
    write_csv,
    write_json,
)
from src.utils import (
    StorageError,
    format_structured_log,
    generate_run_id,
    get_logger,
)

logger = get_logger(__name__)

Columns = Union[pd.DataFrame, Mapping[str, Sequence[Any]]]


class StorageManager:
    """
    Writes the files of one command into an output directory and keeps the
    list of outputs for the run manifest.
    """

    def __init__(self, out_dir: Optional[str] = None, run_id: Optional[str] = None):
        """
        Initialize the storage manager.

        Args:
            out_dir: Output directory (defaults to OUTPUT_DIR from the settings)
            run_id: Run identifier recorded in the manifest

        Raises:
            StorageError: If the output directory cannot be created
        """
        self.instance_id = str(uuid.uuid4())[:8]
        settings = get_settings()
        self.out_dir = out_dir or settings.OUTPUT_DIR
        self.tool_version = settings.APP_VERSION
        self.run_id = run_id or generate_run_id()
        self.started_at = datetime.now(timezone.utc).isoformat()
        self._clock = time.monotonic()
        self.outputs: List[ArtifactRecord] = []
        self.status = StorageStatus.PENDING

        try:
            os.makedirs(self.out_dir, exist_ok=True)
        except OSError as e:
            raise StorageError(
                f"Failed to create output directory {self.out_dir}",
                details={"out_dir": self.out_dir},
                original_exception=e
            )

        logger.debug(
            format_structured_log(
                "StorageManager initialized",
                {"instance_id": self.instance_id, "out_dir": self.out_dir, "run_id": self.run_id}
            )
        )

    def path(self, name: str) -> str:
        return os.path.join(self.out_dir, name)

    def _record(self, name: str) -> ArtifactRecord:
        full = self.path(name)
        record = ArtifactRecord(path=name, sha256=sha256_of(full), size_bytes=os.path.getsize(full))
        self.outputs = [r for r in self.outputs if r.path != name] + [record]
        self.status = StorageStatus.STORED
        logger.info(f"Stored {name} ({record.size_bytes} bytes)")
        return record

    def write_csv(self, name: str, columns: Columns) -> ArtifactRecord:
        frame = columns if isinstance(columns, pd.DataFrame) else pd.DataFrame(dict(columns))
        write_csv(self.path(name), frame)
        return self._record(name)

    def write_json(self, name: str, obj: Any) -> ArtifactRecord:
        write_json(self.path(name), obj)
        return self._record(name)

    def write_bytes(self, name: str, data: bytes) -> ArtifactRecord:
        atomic_write_bytes(self.path(name), data)
        return self._record(name)

    def register(self, name: str) -> ArtifactRecord:
        """Record a file written into the output directory by another service."""
        if not os.path.exists(self.path(name)):
            raise StorageError(
                f"Cannot register missing artifact {name}",
                details={"path": self.path(name)}
            )
        return self._record(name)

    def write_manifest(
        self,
        command: str,
        parameters: Dict[str, Any],
        settings: Optional[Dict[str, Any]] = None,
        seeds: Optional[List[int]] = None,
        status: RunStatus = RunStatus.COMPLETED,
    ) -> RunManifest:
        """
        Write manifest.json listing every output of the run.

        Returns:
            The manifest that was written
        """
        manifest = RunManifest(
            run_id=self.run_id,
            command=command,
            parameters=parameters,
            settings=settings or {},
            tool_version=self.tool_version,
            seeds=seeds or [],
            outputs=list(self.outputs),
            status=status.value,
            started_at=self.started_at,
            wall_clock_seconds=time.monotonic() - self._clock,
        )
        write_json(self.path(MANIFEST_NAME), manifest.dict())
        logger.info(
            format_structured_log(
                "Run manifest written",
                {
                    "run_id": self.run_id,
                    "command": command,
                    "outputs": [r.path for r in self.outputs],
                    "status": status.value,
                }
            )
        )
        return manifest
