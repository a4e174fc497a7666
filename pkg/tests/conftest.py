import pytest

from hfdinv import from_polynomial, pretzel


@pytest.fixture(scope="session")
def p237():
    return pretzel(3)


@pytest.fixture(scope="session")
def p239():
    return pretzel(4)


@pytest.fixture(scope="session")
def unknot():
    return from_polynomial("unknot", "1")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
