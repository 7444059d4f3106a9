"""Seeded graph families for tests, demos and ``rmis gen``."""

from __future__ import annotations

import random

from .classification import on_cycle_vertices
from .graph import (
    Graph,
    GraphError,
    canonical_edge,
    complete_bipartite_graph,
    cycle_graph,
    is_bipartite,
    new_graph,
    path_graph,
    star_graph,
)
from .decomposition import is_biconnected

# component B of the worked example: original vertex ids and edges
COMPONENT_B_VERTICES = (1, 2, 6, 8, 9, 10, 11, 13)
COMPONENT_B_EDGES = ((1, 2), (2, 6), (6, 8), (8, 9), (9, 10), (10, 11), (11, 13), (13, 1), (2, 11))


def fixture_component_b() -> tuple[Graph, list[int]]:
    """The 8-vertex, 9-edge component, densely re-indexed, with its original ids."""
    idx = {v: i for i, v in enumerate(COMPONENT_B_VERTICES)}
    g = new_graph(len(idx), [(idx[u], idx[v]) for u, v in COMPONENT_B_EDGES])
    return g, list(COMPONENT_B_VERTICES)


def random_tree_edges(n: int, rng: random.Random) -> set:
    order = list(range(n))
    rng.shuffle(order)
    return {canonical_edge(order[k], order[rng.randrange(k)]) for k in range(1, n)}


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Random spanning tree plus each remaining pair independently with probability ``p``."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise GraphError(f"bad parameters n={n} p={p}")
    rng = random.Random(seed)
    edges = random_tree_edges(n, rng)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return new_graph(n, edges)


def random_connected_avg_degree(n: int, degree: float, seed: int) -> Graph:
    """Random spanning tree topped up with uniform extra edges to the target mean degree."""
    rng = random.Random(seed)
    edges = random_tree_edges(n, rng)
    target = min(int(degree * n / 2), n * (n - 1) // 2)
    while len(edges) < target:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add(canonical_edge(u, v))
    return new_graph(n, edges)


def random_biconnected(n: int, seed: int, bipartite: bool = False, p: float = 0.3) -> Graph:
    """Rejection-sample a biconnected graph; with ``bipartite`` only cross edges of a random split are drawn."""
    if n < 3 or (bipartite and n < 4):
        raise GraphError("too few vertices for the requested biconnected graph")
    rng = random.Random(seed)
    while True:
        if bipartite:
            left = set(rng.sample(range(n), rng.randint(2, n - 2)))
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u in left) != (v in left)]
        else:
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = new_graph(n, [e for e in pairs if rng.random() < p])
        if is_biconnected(g):
            return g


def sputnik_from(base: Graph) -> Graph:
    """Hang one new pendant vertex on every vertex of ``base`` that lies on a cycle."""
    cyc = sorted(on_cycle_vertices(base))
    edges = list(base.edges) + [(v, base.n + i) for i, v in enumerate(cyc)]
    return new_graph(base.n + len(cyc), edges)


def random_bipartite_connected(n: int, extra: int, seed: int) -> Graph:
    """Random spanning tree plus ``extra`` edges that respect its 2-colouring."""
    rng = random.Random(seed)
    g = new_graph(n, random_tree_edges(n, rng))
    side = {0: 0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in side:
                side[w] = 1 - side[u]
                stack.append(w)
    edges = set(g.edges)
    left = [v for v in range(n) if side[v] == 0]
    right = [v for v in range(n) if side[v] == 1]
    target = min(len(edges) + extra, len(left) * len(right))
    while len(edges) < target:
        edges.add(canonical_edge(rng.choice(left), rng.choice(right)))
    out = new_graph(n, edges)
    assert is_bipartite(out)
    return out


__all__ = [
    "complete_bipartite_graph",
    "cycle_graph",
    "fixture_component_b",
    "path_graph",
    "random_biconnected",
    "random_bipartite_connected",
    "random_connected",
    "random_connected_avg_degree",
    "sputnik_from",
    "star_graph",
]
