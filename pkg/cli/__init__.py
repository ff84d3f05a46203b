from .commands import cli
from .report import size_table, render_report

__all__ = [
    "cli",
    "size_table",
    "render_report"
]
