import pytest

from strongedge import GenSpec, MultiGraph, generate, petersen


@pytest.fixture
def named():
    return {
        "P2": MultiGraph(2, [(0, 1)]),
        "P3": generate(GenSpec("path", 3)),
        "P4": generate(GenSpec("path", 4)),
        "P5": generate(GenSpec("path", 5)),
        "C5": generate(GenSpec("cycle", 5)),
        "K4": generate(GenSpec("complete", 4)),
        "K5": generate(GenSpec("complete", 5)),
        "star3": generate(GenSpec("star", 4)),
        "star5": generate(GenSpec("star", 6)),
        "petersen": petersen(),
        "double": MultiGraph(2, [(0, 1), (0, 1)]),
        "diamond": MultiGraph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]),
    }


def pytest_terminal_summary(terminalreporter):
    from .acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
