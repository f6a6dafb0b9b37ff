"""
Performance tracking for estimate computations.
Per-method call counts, failures and wall time.
"""

import itertools
import logging
import time
from typing import Dict, Optional

logger = logging.getLogger(__name__)


class PerformanceTracker:
    """Track per-method timing of computations."""

    def __init__(self):
        self.metrics: Dict[str, Dict[str, float]] = {}
        self.active_timings: Dict[str, Dict] = {}
        self.last_errors: Dict[str, str] = {}
        self._ids = itertools.count(1)

    def start_timing(self, method: str, n: float) -> str:
        """Start timing one computation."""
        timing_id = f"{method}_{n}_{next(self._ids)}"
        self.active_timings[timing_id] = {
            "method": method,
            "start_time": time.perf_counter()
        }
        return timing_id

    def end_timing(self, timing_id: str, success: bool = True, error: Optional[str] = None) -> float:
        """Complete timing; returns the elapsed milliseconds (0 for an unknown id)."""
        if timing_id not in self.active_timings:
            return 0.0

        timing_data = self.active_timings.pop(timing_id)
        method = timing_data["method"]
        duration = time.perf_counter() - timing_data["start_time"]

        if method not in self.metrics:
            self.metrics[method] = {
                "calls": 0,
                "errors": 0,
                "total_time": 0.0
            }

        self.metrics[method]["calls"] += 1
        self.metrics[method]["total_time"] += duration
        if not success:
            self.metrics[method]["errors"] += 1
            if error:
                self.last_errors[method] = error
                logger.debug(f"[PERF] {method} failed after {1000.0 * duration:.1f}ms: {error}")
        return 1000.0 * duration

    def record(self, method: str, runtime_ms: float, success: bool = True):
        """Fold in a timing measured elsewhere (a worker process)."""
        entry = self.metrics.setdefault(method, {"calls": 0, "errors": 0, "total_time": 0.0})
        entry["calls"] += 1
        entry["total_time"] += runtime_ms / 1000.0
        if not success:
            entry["errors"] += 1

    def get_performance_summary(self) -> str:
        """Get a performance summary string."""
        if not self.metrics:
            return "No performance data available"

        summary_parts = []
        for method, data in self.metrics.items():
            if data["calls"] == 0:
                continue

            success_rate = ((data["calls"] - data["errors"]) / data["calls"]) * 100
            avg_ms = 1000.0 * data["total_time"] / data["calls"]

            summary_parts.append(
                f"{method}: {data['calls']} calls, "
                f"{success_rate:.1f}% success rate, "
                f"{avg_ms:.1f}ms avg time"
            )

        return "; ".join(summary_parts) if summary_parts else "No performance data"
