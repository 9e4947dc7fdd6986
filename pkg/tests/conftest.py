import sys

import pytest

from lmov import quantum_engine


@pytest.fixture(autouse=True)
def _no_disk_cache():
    quantum_engine.set_disk_cache(None)
    yield
    quantum_engine.set_disk_cache(None)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
