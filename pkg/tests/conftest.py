import itertools

import pytest

from kostant.rootsys import make_context


@pytest.fixture(params=range(1, 6))
def ctx(request):
    return make_context(request.param)


def sum_zero_grid(n, lo, hi):
    for v in itertools.product(range(lo, hi + 1), repeat=n):
        if sum(v) == 0:
            yield v


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
