"""Johnson Sep Services."""
from .report_writer import render_report, write_report_json

__all__ = [
    'render_report',
    'write_report_json',
]
