import pytest
from hypothesis import HealthCheck, settings

from multikoszul.corpus import load
from multikoszul.presentation import parse

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@pytest.fixture(scope="session")
def C1():
    return load("notcoprodcasi_1")


@pytest.fixture(scope="session")
def C2():
    return load("notcoprodcasi_2")


@pytest.fixture(scope="session")
def difkos():
    return load("difkos")


@pytest.fixture(scope="session")
def x2y3():
    return load("x2_y3")


@pytest.fixture
def pres():
    return parse


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
