from fractions import Fraction

import pytest

from fpgrover.reference import GroverParams


def frac(x) -> Fraction:
    return Fraction(x)


@pytest.fixture
def n2():
    """Smallest nontrivial case, every step exact at f=10."""
    return GroverParams(2, 10, 1)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
