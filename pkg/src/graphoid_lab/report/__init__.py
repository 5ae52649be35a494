"""
Report formatting for Graphoid Lab
"""

from .formatter import ReportFormatter, to_json

__all__ = ["ReportFormatter", "to_json"]
