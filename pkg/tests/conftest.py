import pytest

from corpus import CORPUS, EXACT


@pytest.fixture(params=sorted(CORPUS))
def corpus_case(request):
    g, bound = CORPUS[request.param]
    return request.param, g, bound


@pytest.fixture(params=sorted(EXACT))
def exact_graph(request):
    return EXACT[request.param]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
