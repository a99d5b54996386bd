import pytest

from dissolab.catalog import connected_bipartite_graphs, connected_graphs


@pytest.fixture(scope="session")
def connected_catalog_8():
    """Every connected graph on up to 8 vertices, one per isomorphism class."""
    return [g for n in range(1, 9) for g in connected_graphs(n)]


@pytest.fixture(scope="session")
def bipartite_catalog_10():
    """Every connected bipartite graph on up to 10 vertices."""
    return [g for n in range(1, 11) for g in connected_bipartite_graphs(n)]
