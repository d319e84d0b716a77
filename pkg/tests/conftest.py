"""Shared fixtures and the acceptance-criterion summary hook.

Acceptance tests register one record per criterion; after the run a summary
block prints one pass/fail line for each, in order, regardless of which
tests were selected.
"""

import pytest

_CRITERIA = {}


@pytest.fixture
def criterion():
    """Record an acceptance criterion outcome: criterion(n, desc, ok, detail)."""

    def record(num: int, desc: str, ok: bool, detail: str = ""):
        _CRITERIA[num] = (desc, bool(ok), detail)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in sorted(_CRITERIA):
        desc, ok, detail = _CRITERIA[num]
        status = "PASS" if ok else "FAIL"
        line = f"criterion {num:2d} [{status}] {desc}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
