import pytest

from clutterlab.clutter import make_clutter


@pytest.fixture
def pentagon():
    return make_clutter(range(1, 6), [{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}])


@pytest.fixture
def path3():
    return make_clutter(range(1, 4), [{1, 2}, {2, 3}])


def pytest_terminal_summary(terminalreporter):
    from ._acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
