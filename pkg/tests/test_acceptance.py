"""Acceptance suite: one test per criterion, each at its stated tolerance.

A summary line per criterion is printed at the end of the run.
"""
import time

import pytest

from prasym import acceptance

BUDGET = {1: 30, 3: 60, 4: 60}  # seconds, where a runtime bound is stated


@pytest.mark.parametrize("crit", acceptance.CRITERIA, ids=lambda c: c.__name__)
def test_criterion(crit, record_criterion):
    t0 = time.perf_counter()
    result = record_criterion(crit())
    elapsed = time.perf_counter() - t0
    assert result.passed, f"{result.line()}: {result.details}"
    if result.number in BUDGET:
        assert elapsed <= BUDGET[result.number]


if __name__ == "__main__":
    for r in acceptance.run_all():
        print(r.line())
