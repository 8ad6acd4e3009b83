import contextlib
import time

import pytest

_ACCEPTANCE: list = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion as PASS/FAIL for the terminal summary."""

    @contextlib.contextmanager
    def record(number: int, title: str):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            _ACCEPTANCE.append((number, title, "FAIL", time.perf_counter() - start))
            raise
        _ACCEPTANCE.append((number, title, "PASS", time.perf_counter() - start))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, elapsed in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} ({elapsed:.2f}s)")
