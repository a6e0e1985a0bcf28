import itertools

import pytest

from orbimgs.diagrams import OrbifoldParams, validate_params

# acceptance grid; genus 0 with two punctures is run from q = 3 up
GRID = [
    OrbifoldParams(n, p, q)
    for n, p, q in itertools.product(range(5), range(2, 8), range(1, 5))
    if validate_params(OrbifoldParams(n, p, q)) is None and not (n == 0 and p == 2 and q < 3)
]


@pytest.fixture(params=GRID, ids=str)
def grid_params(request):
    return request.param

ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
