"""
Reporting - output records, number formatting and table rendering
"""

from .models import CheckRecord, OutputRecord
from .performance import PerformanceTracker
from .table_exporter import TableExporter

__all__ = ["OutputRecord", "CheckRecord", "PerformanceTracker", "TableExporter"]
