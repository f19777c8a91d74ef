import pytest

from traceskein.surface import four_punctured_sphere, punctured_torus


@pytest.fixture(scope="session")
def torus():
    return punctured_torus()


@pytest.fixture(scope="session")
def sphere():
    return four_punctured_sphere()


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
