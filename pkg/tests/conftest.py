import pytest

from lapbound.numerics import make_rng


@pytest.fixture
def rng():
    return make_rng(12345)


def random_symmetric(rng, n):
    A = rng.standard_normal((n, n))
    return A + A.T


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
