"""Chart-by-chart certification of the clean-intersection identity."""

from .core import (CLEAN, EMPTY_CLEAN, MISMATCH, MODULO_RADICALITY, ChartReport, ChartTask,
                   Discrepancy, all_tasks, cross_check, read_published, run_tasks, summarize, sweep, verify_chart)
from .props import Suite, props
from .report import digest, document, to_json, to_markdown
from .transcript import TRANSCRIPT, TranscriptEntry

__all__ = [
    "CLEAN", "EMPTY_CLEAN", "MISMATCH", "MODULO_RADICALITY", "ChartReport", "ChartTask",
    "Discrepancy", "all_tasks", "cross_check", "read_published", "run_tasks", "summarize", "sweep",
    "verify_chart", "Suite", "props", "TRANSCRIPT", "TranscriptEntry",
    "digest", "document", "to_json", "to_markdown",
]
