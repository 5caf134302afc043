import pytest

from chipfire.catalog import (
    banana_graph,
    complete_graph,
    connected_multigraphs,
    cycle_graph,
    pentagon_with_chord,
)


@pytest.fixture(scope="session")
def b2():
    return banana_graph(2)


@pytest.fixture(scope="session")
def b3():
    return banana_graph(3)


@pytest.fixture(scope="session")
def c3():
    return cycle_graph(3)


@pytest.fixture(scope="session")
def k4():
    return complete_graph(4)


@pytest.fixture(scope="session")
def pentagon():
    return pentagon_with_chord()


@pytest.fixture(scope="session")
def catalog_tiny():
    """Everything up to 4 vertices and 5 edges; small enough for brute oracles."""
    return list(connected_multigraphs(4, 5))


@pytest.fixture(scope="session")
def catalog_full():
    """The whole census up to 5 vertices and 8 edges; shared so the
    generation cost is paid once per run."""
    return list(connected_multigraphs(5, 8))
