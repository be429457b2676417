import functools

import pytest

from greenseq import preset, run_pipeline


@functools.lru_cache(maxsize=None)
def pipeline(name: str):
    return run_pipeline(preset(name), debug=True)


@pytest.fixture(scope="session")
def run():
    """Cached full pipeline per preset name (with per-vertex compatibility checks)."""
    return pipeline


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
