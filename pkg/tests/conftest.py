from __future__ import annotations

import os
import sys

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(results):
        terminalreporter.write_line(f"criterion {criterion}: {results[criterion]}")
