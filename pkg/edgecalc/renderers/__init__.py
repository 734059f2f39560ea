"""Output format renderers"""

from . import csv_renderer, json_renderer

__all__ = [
    "csv_renderer",
    "json_renderer",
]
