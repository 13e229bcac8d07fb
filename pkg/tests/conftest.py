from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wardengame.core import GoalSpec
from wardengame.solver import RemotenessTable, solve


@pytest.fixture(scope="session")
def solved():
    """Session-wide cache of solved tables, keyed by spec."""
    cache: dict[GoalSpec, RemotenessTable] = {}

    def get(spec: GoalSpec) -> RemotenessTable:
        if spec not in cache:
            cache[spec] = solve(spec)
        return cache[spec]

    return get


def pytest_runtest_logreport(report):
    """One uncaptured pass/fail line per acceptance criterion."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    status = "PASS" if report.passed else ("FAIL" if report.failed else "SKIP")
    sys.stderr.write(f"ACCEPTANCE {status}: {name}\n")
    sys.stderr.flush()
