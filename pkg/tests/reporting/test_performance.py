from src.reporting.performance import PerformanceTracker


def test_empty_summary():
    assert PerformanceTracker().get_performance_summary() == "No performance data available"


def test_timing_round_trip():
    tracker = PerformanceTracker()
    timing_id = tracker.start_timing("m-term", 137)
    assert tracker.end_timing(timing_id) >= 0.0
    assert tracker.metrics["m-term"]["calls"] == 1
    assert "m-term: 1 calls, 100.0% success rate" in tracker.get_performance_summary()


def test_failures_and_unknown_ids():
    tracker = PerformanceTracker()
    tracker.end_timing(tracker.start_timing("oracle", 3), success=False, error="boom")
    tracker.record("oracle", 10.0)
    assert tracker.metrics["oracle"]["errors"] == 1
    assert tracker.last_errors == {"oracle": "boom"}
    assert "50.0% success rate" in tracker.get_performance_summary()
    assert tracker.end_timing("missing") == 0.0


def test_success_leaves_no_error():
    tracker = PerformanceTracker()
    tracker.end_timing(tracker.start_timing("kc", 5), error="ignored on success")
    assert tracker.last_errors == {}
