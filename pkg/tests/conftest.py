import pytest

from polyekr.field import make_field
from polyekr.poly import Poly

ACCEPTANCE_LINES: list[str] = []


def P(f, *coeffs):
    """Polynomial from coefficient indices, constant term first."""
    return Poly(f, list(coeffs))


@pytest.fixture(scope="session")
def F2():
    return make_field(2)


@pytest.fixture(scope="session")
def F3():
    return make_field(3)


@pytest.fixture(scope="session")
def F4():
    return make_field(2, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
