import pytest

from monocrystal import Convention, MonomialCrystal, parse


@pytest.fixture
def a5():
    return Convention(5)


@pytest.fixture
def ops5(a5):
    return MonomialCrystal(a5)


@pytest.fixture
def mono5():
    return lambda text: parse(text, 5)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
