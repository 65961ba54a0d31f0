"""
Log levels accepted by LOG_LEVEL and --log-level.
"""

import logging
from enum import Enum
from typing import List


class LogLevel(str, Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"

    @property
    def numeric(self) -> int:
        return getattr(logging, self.value)

    @classmethod
    def choices(cls) -> List[str]:
        return [level.value for level in cls]

    @classmethod
    def parse(cls, name: str) -> "LogLevel":
        """
        Case-insensitive lookup.

        Raises:
            ValueError: unknown level name
        """
        try:
            return cls(name.strip().upper())
        except ValueError:
            raise ValueError(f"Invalid log level: {name} (expected one of {', '.join(cls.choices())})")
