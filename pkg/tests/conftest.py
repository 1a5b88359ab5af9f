import pytest

from quaddiag import parse_form

EQ_CENTRAL = "x1^2 + 5*x2^2 + x3^2 + 2*x1*x2 + 6*x1*x3 + 2*x2*x3 + 8*x1 + 20*x2 + 16 = 0"
EQ_CENTERED = "x1^2 + 5*x2^2 + x3^2 + 2*x1*x2 + 6*x1*x3 + 2*x2*x3 = 0"
EQ_CONE = "9*x1^2 + 36*x2^2 - 4*x3^2 = 0"
THUE = "x1^2 + 2*x1*x2 + x2^2 - 1 = 0"
IRRATIONAL = "x1^2 + x1*x2 = 0"

# eigenvectors in the order and signs of the worked example
WORKED_EIGVECS = [(1, -1, 1), (1, 2, 1), (-1, 0, 1)]
A_CENTRAL = [[1, 1, 3], [1, 5, 1], [3, 1, 1]]


@pytest.fixture
def central():
    return parse_form(EQ_CENTRAL)


@pytest.fixture
def centered():
    return parse_form(EQ_CENTERED)


@pytest.fixture
def cone():
    return parse_form(EQ_CONE)


@pytest.fixture
def thue():
    return parse_form(THUE)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
