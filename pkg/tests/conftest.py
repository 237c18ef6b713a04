import os

os.environ.setdefault("TKINGS_CHECKED", "1")

import pytest  # noqa: E402

from tkings.generators import cycle3, transitive_tournament  # noqa: E402


@pytest.fixture
def cyc3():
    return cycle3()


@pytest.fixture
def trans3():
    return transitive_tournament(3)


def pytest_terminal_summary(terminalreporter):
    from helpers import CRITERIA

    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
