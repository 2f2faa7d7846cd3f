import pytest

from flatgraph import GraphStore, StoreConfig, store_new

DATA_GRAPHS = ["path3", "triangle", "star5", "split4", "tangle6"]


def build_graph(n, m, edges):
    """Store with vertices 1..n live and edges {(src, slot): (dst, w)}."""
    g = store_new(StoreConfig(n, m))
    for _ in range(n):
        g.alloc_vertex()
    for (src, slot), (dst, w) in edges.items():
        g.set_edge(src, slot, dst)
        g.set_weight(src, slot, w)
    return g


@pytest.fixture
def path3():
    # 1 -> 2 -> 3, unit weights
    return build_graph(3, 2, {(1, 0): (2, 1), (2, 0): (3, 1)})


@pytest.fixture
def triangle():
    # 1 -> 2 (weight 5), 1 -> 3 (weight 1), 3 -> 2 (weight 1)
    return build_graph(3, 2, {(1, 0): (2, 5), (1, 1): (3, 1), (3, 0): (2, 1)})
