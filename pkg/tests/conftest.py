import pytest

from bubblecut import BubbleModel

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def p3_model():
    # B_{1,1}={0}, B_{2,1}={1}, B_{1,2}={2}
    return BubbleModel.from_lists(3, [[[0], [1]], [[2]]])


@pytest.fixture
def k3_model():
    return BubbleModel.from_lists(3, [[[0, 1, 2]]])
