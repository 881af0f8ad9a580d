import pytest

from kempe.generators import complete_graph, rigid_colouring


def pairs(G):
    return [tuple(uv) for uv in G.edges]


@pytest.fixture(scope="session")
def k5_rigid():
    return rigid_colouring(5)


@pytest.fixture(scope="session")
def k4():
    return complete_graph(4)


def pytest_terminal_summary(terminalreporter):
    import sys
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
