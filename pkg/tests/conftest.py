"""Acceptance line collector.

test_acceptance.py logs one verdict line per criterion through the
acceptance_log fixture; the lines are replayed in a terminal section
after the run so the per-criterion verdicts are visible in one place
even when individual tests fail.
"""

import pytest


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def acceptance_log(request):
    lines = request.config._acceptance_lines

    def log(index: int, text: str):
        lines.append((index, text))

    return log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, text in sorted(lines):
        terminalreporter.write_line(text)
