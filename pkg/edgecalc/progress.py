"""
Progress callbacks for verification suites

Suites report progress through a callback so the CLI decides whether updates are logged
or dropped.
"""

import logging
import threading
from abc import ABC, abstractmethod
from typing import Optional

logger = logging.getLogger(__name__)


class ProgressCallback(ABC):
    """Abstract base class for progress callbacks"""

    @abstractmethod
    def update(self, stage: str, progress: int, message: str, **kwargs) -> None:
        """
        Update progress

        Args:
            stage: Current suite (verify-coords, fredholm, etc.)
            progress: Progress percentage (0-100)
            message: Human-readable progress message
            **kwargs: Additional context (chart, records, etc.)
        """


class NoOpProgressCallback(ProgressCallback):
    """Drops every update"""

    def update(self, stage: str, progress: int, message: str, **kwargs) -> None:
        pass


class LoggingProgressCallback(ProgressCallback):
    """Logs progress updates; safe to share between worker threads"""

    def __init__(self):
        self._lock = threading.Lock()

    def update(self, stage: str, progress: int, message: str, **kwargs) -> None:
        context = " ".join(f"{key}={value}" for key, value in sorted(kwargs.items()))
        with self._lock:
            logger.info(f"Progress [{stage}] {progress}%: {message} {context}".rstrip())


def create_progress_callback(quiet: Optional[bool] = False) -> ProgressCallback:
    """
    Create the progress callback for a run

    Args:
        quiet: Drop updates instead of logging them

    Returns:
        ProgressCallback instance
    """
    if quiet:
        return NoOpProgressCallback()
    return LoggingProgressCallback()
