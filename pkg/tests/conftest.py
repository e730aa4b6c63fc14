from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings

import subgames.core as core

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], print_blob=True
)
settings.register_profile("ci", parent=settings.get_profile("default"), max_examples=300)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


# Every analyze() call checks Ferguson's property on the prefix it computed.
# Count those checks across the whole session so the acceptance report can
# state how many games were covered.
FERGUSON = {"checks": 0, "failures": 0}
ACCEPTANCE: dict[int, tuple[bool, str]] = {}

_original_check = core.check_ferguson


def _counting_check(seq):
    ok = _original_check(seq)
    FERGUSON["checks"] += 1
    FERGUSON["failures"] += not ok
    return ok


@pytest.fixture(autouse=True, scope="session")
def _count_ferguson():
    core.check_ferguson = _counting_check
    yield
    core.check_ferguson = _original_check


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[n]
        tr.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:2d}. {line}")
    tr.write_line(
        f"Ferguson checks during this session: {FERGUSON['checks']}, failures: {FERGUSON['failures']}"
    )
