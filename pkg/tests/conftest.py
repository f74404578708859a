from fractions import Fraction

import pytest

from substdyn.corpus import get
from substdyn.mcnaughton import flip, from_points, identity


def rationals_upto(max_den: int) -> list[Fraction]:
    return sorted({Fraction(k, d) for d in range(1, max_den + 1) for k in range(d + 1)})


@pytest.fixture(scope="session")
def s_map():
    return get("example14_s").map


@pytest.fixture(scope="session")
def t_map():
    return get("example14_t").map


@pytest.fixture(scope="session")
def tent():
    return from_points([(0, 0), (Fraction(1, 2), 1), (1, 0)])


@pytest.fixture(scope="session")
def ident():
    return identity()


@pytest.fixture(scope="session")
def flipped():
    return flip()


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
