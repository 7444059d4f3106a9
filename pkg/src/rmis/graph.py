"""Immutable simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

Edge = tuple[int, int]
VertexSet = frozenset  # frozenset[int]


class GraphError(ValueError):
    """Raised when a graph cannot be built or edited as requested."""


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    Build instances with :func:`new_graph`; the adjacency lists are sorted
    ascending so every traversal downstream is reproducible.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: frozenset = field(repr=False)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def new_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a graph, deduplicating edges given in either orientation."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    canon: set[Edge] = set()
    for pair in edges:
        u, v = pair
        if u == v:
            raise GraphError(f"self-loop {pair!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {pair!r} has a vertex outside [0, {n})")
        canon.add(canonical_edge(u, v))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in canon:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj), frozenset(canon))


def _bfs_order(g: Graph, start: int, seen: list[bool]) -> list[int]:
    seen[start] = True
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
                queue.append(w)
    return order


def connected_components(g: Graph) -> list[VertexSet]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for v in range(g.n):
        if not seen[v]:
            comps.append(frozenset(_bfs_order(g, v, seen)))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(_bfs_order(g, 0, [False] * g.n)) == g.n


def bipartition(g: Graph) -> Optional[dict[int, int]]:
    """2-colour ``g`` by BFS, or return None if some component has an odd cycle.

    In every component the smallest vertex id gets side 0.
    """
    side: dict[int, int] = {}
    for s in range(g.n):
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def remove_edges(g: Graph, f: Iterable[Edge]) -> Graph:
    drop = {canonical_edge(u, v) for u, v in f}
    missing = drop - g.edges
    if missing:
        raise GraphError(f"edges not in graph: {sorted(missing)}")
    return new_graph(g.n, g.edges - drop)


def add_edges(g: Graph, f: Iterable[Edge]) -> Graph:
    return new_graph(g.n, set(g.edges) | set(f))


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, list[int], dict[int, int]]:
    """Return ``(sub, to_global, to_local)`` for the subgraph induced by ``vs``.

    Local ids follow the ascending order of the original ids.
    """
    to_global = sorted(set(vs))
    to_local = {v: i for i, v in enumerate(to_global)}
    for v in to_global:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside [0, {g.n})")
    sub_edges = [
        (to_local[u], to_local[w])
        for u in to_global
        for w in g.adjacency[u]
        if u < w and w in to_local
    ]
    return new_graph(len(to_global), sub_edges), to_global, to_local


def split_components(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Each connected component as its own graph plus the local-to-global map."""
    out = []
    for comp in connected_components(g):
        sub, to_global, _ = induced_subgraph(g, comp)
        out.append((sub, to_global))
    return out


# small named graphs used throughout tests, demos and the CLI generators


def path_graph(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return new_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return complete_bipartite_graph(1, leaves)


def complete_graph(n: int) -> Graph:
    return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def bull_graph() -> Graph:
    """The bull: triangle 1-2-3 with horns 0 (on 1) and 4 (on 2)."""
    return new_graph(5, [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4)])
