import random

import pytest

from bcoloring.graphs import graph_from_edges


@pytest.fixture(scope="session")
def atlas_graphs():
    """All graphs on 1..6 vertices up to isomorphism, from the networkx atlas."""
    networkx = pytest.importorskip("networkx")
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for nxg in graph_atlas_g():
        n = nxg.number_of_nodes()
        if not 1 <= n <= 6:
            continue
        out.append(graph_from_edges(n, list(nxg.edges())))
    assert len(out) == 208  # 1 + 2 + 4 + 11 + 34 + 156
    return out


@pytest.fixture()
def rng():
    return random.Random(0x5EED)
