import time
from contextlib import contextmanager

import pytest

from givinggame import fixture

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def fig2():
    return fixture("figure2")


@pytest.fixture
def fig6a():
    return fixture("figure6a")


@pytest.fixture
def criterion():
    """Record one acceptance criterion's outcome for the end-of-run summary."""

    @contextmanager
    def record(number: int, title: str, limit_s: float):
        t0 = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            ACCEPTANCE[number] = (False, f"{title}: {type(exc).__name__}: {exc}".splitlines()[0])
            raise
        elapsed = time.perf_counter() - t0
        ok = elapsed < limit_s
        ACCEPTANCE[number] = (ok, f"{title} ({elapsed:.4g}s, limit {limit_s:g}s)")
        assert ok, f"criterion {number} took {elapsed:.4g}s, limit {limit_s}s"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {number:>2}. {text}")
