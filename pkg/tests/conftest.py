import itertools
from collections import defaultdict
from functools import lru_cache

import pytest

from rmis.graph import bull_graph, is_connected, new_graph


@lru_cache(maxsize=None)
def connected_graphs(n):
    """Every connected labeled simple graph on vertices 0..n-1."""
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        g = new_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if is_connected(g):
            out.append(g)
    return tuple(out)


def connected_graphs_upto(n_max):
    for n in range(1, n_max + 1):
        yield from connected_graphs(n)


def atlas_connected(max_nodes=7):
    """Connected graphs up to isomorphism from the networkx atlas (at most 7 vertices)."""
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for h in graph_atlas_g()[1:]:
        if h.number_of_nodes() > max_nodes:
            continue
        g = new_graph(h.number_of_nodes(), h.edges())
        if is_connected(g):
            out.append(g)
    return out


@lru_cache(maxsize=None)
def connected_graphs_by_edges(max_edges):
    """Connected graphs up to isomorphism, grouped by edge count 0..max_edges.

    Every connected graph with k+1 edges arises from one with k edges by adding
    an edge or a pendant edge (drop a cycle edge, or a leaf of a tree).
    """
    import networkx as nx

    levels = [[nx.empty_graph(1)]]
    for _ in range(max_edges):
        buckets = defaultdict(list)
        nxt = []
        for h in levels[-1]:
            n = h.number_of_nodes()
            cands = [(u, v) for u, v in itertools.combinations(range(n), 2) if not h.has_edge(u, v)]
            cands += [(u, n) for u in range(n)]
            for u, v in cands:
                k = h.copy()
                k.add_edge(u, v)
                key = (k.number_of_nodes(), nx.weisfeiler_lehman_graph_hash(k, iterations=3))
                if any(nx.is_isomorphic(k, o) for o in buckets[key]):
                    continue
                buckets[key].append(k)
                nxt.append(k)
        levels.append(nxt)
    return tuple(tuple(new_graph(h.number_of_nodes(), h.edges()) for h in level) for level in levels)


@pytest.fixture
def bull():
    return bull_graph()
