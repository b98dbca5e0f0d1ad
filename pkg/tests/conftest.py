"""Shared fixtures and the acceptance summary printed after the run."""
from __future__ import annotations

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# criterion number -> (passed, detail), filled in by test_acceptance
CRITERIA: dict[int, tuple[bool, str]] = {}

FIGURE_1 = "ud" + "uuu" + "d" + "uu" + "d" + "u" + "d" + "u" + "d" + "uu" + "dddd" + "u" + "dd" + "uu" + "dd"


@pytest.fixture
def figure1():
    return FIGURE_1


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        ok, detail = CRITERIA[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
