"""Brute-force ground truth for small graphs.

Everything here works from the definitions: enumerate the maximal
independent sets, and call one robust when no connected spanning subgraph
leaves an excluded vertex without a neighbour in the set. Nothing here
uses the decomposition tree or the 2-SAT reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph, GraphError, is_connected, new_graph

MAX_ENUM_VERTICES = 24
MAX_SUBGRAPH_EDGES = 20


class OracleRefusal(ValueError):
    """The instance is beyond the brute-force size guards."""


class NotAnMisError(ValueError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason  # "not independent" or "not maximal"


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in nbrs) for nbrs in g.adjacency]


def enumerate_mis(g: Graph) -> list[frozenset]:
    """All maximal independent sets, sorted as ascending id tuples.

    Bron-Kerbosch with pivoting on the complement graph.
    """
    if g.n > MAX_ENUM_VERTICES:
        raise OracleRefusal(f"{g.n} vertices exceeds the enumeration limit {MAX_ENUM_VERTICES}")
    full = (1 << g.n) - 1
    free = [full & ~m & ~(1 << v) for v, m in enumerate(_masks(g))]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        px = p | x
        pivot = max(_bits(px), key=lambda u: bin(p & free[u]).count("1"))
        for v in _bits(p & ~free[pivot]):
            bit = 1 << v
            expand(r | bit, p & free[v], x & free[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    sets = [tuple(_bits(r)) for r in found]
    sets.sort()
    return [frozenset(s) for s in sets]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def check_mis(g: Graph, m: Iterable[int]) -> frozenset:
    """Return ``m`` as a frozenset, raising NotAnMisError if it is not an MIS of ``g``."""
    m = frozenset(m)
    for v in m:
        if not 0 <= v < g.n:
            raise NotAnMisError(f"vertex {v} is not in the graph")
    for u, w in g.edges:
        if u in m and w in m:
            raise NotAnMisError("not independent")
    for v in range(g.n):
        if v not in m and not any(w in m for w in g.adjacency[v]):
            raise NotAnMisError("not maximal")
    return m


def weak_vertices(g: Graph, m: frozenset) -> list[int]:
    """Excluded vertices that can lose every neighbour in ``m`` while ``g`` stays connected.

    For an excluded ``u`` the best a connected spanning subgraph can do to
    uncover it is drop every edge from ``u`` into ``m`` and keep the rest,
    so ``u`` is a failure exactly when ``g`` minus those edges is connected.
    """
    out = []
    for u in range(g.n):
        if u not in m and _connected_without_links(g, u, m):
            out.append(u)
    return out


def _connected_without_links(g: Graph, u: int, m: frozenset) -> bool:
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        a = stack.pop()
        for b in g.adjacency[a]:
            if seen[b]:
                continue
            if (a == u and b in m) or (b == u and a in m):
                continue
            seen[b] = True
            count += 1
            stack.append(b)
    return count == g.n


def is_robust_mis(g: Graph, m: Iterable[int]) -> bool:
    if not is_connected(g):
        raise GraphError("robustness is defined for connected graphs")
    m = check_mis(g, m)
    return not weak_vertices(g, m)


def is_robust_mis_exhaustive(g: Graph, m: Iterable[int]) -> bool:
    """Check maximality in every connected spanning subgraph, one by one."""
    if g.m > MAX_SUBGRAPH_EDGES:
        raise OracleRefusal(f"{g.m} edges exceeds the subgraph enumeration limit {MAX_SUBGRAPH_EDGES}")
    if not is_connected(g):
        raise GraphError("robustness is defined for connected graphs")
    m = check_mis(g, m)
    n = g.n
    if n <= 1:
        return True
    edges = g.sorted_edges()
    in_mask = sum(1 << v for v in m)
    full = (1 << n) - 1
    for subset in range(1 << len(edges)):
        if bin(subset).count("1") < n - 1:
            continue
        adj = [0] * n
        s = subset
        i = 0
        while s:
            if s & 1:
                u, w = edges[i]
                adj[u] |= 1 << w
                adj[w] |= 1 << u
            s >>= 1
            i += 1
        reach = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~reach
            reach |= nxt
        if reach != full:
            continue
        for v in range(n):
            if not (in_mask >> v) & 1 and not adj[v] & in_mask:
                return False
    return True


def exists_rmis_bf(g: Graph) -> Optional[frozenset]:
    """First robust MIS in enumeration order, or None."""
    for m in enumerate_mis(g):
        if not weak_vertices(g, m):
            return m
    return None


def forall_rmis_bf(g: Graph) -> bool:
    return all(not weak_vertices(g, m) for m in enumerate_mis(g))


# -- the augmented component used to validate the 2-SAT reduction -----------


@dataclass(frozen=True)
class GadgetGraph:
    """A component with a two-edge path hung on every constrained vertex.

    Base vertices keep their ids; ``prime[v]`` and ``double_prime[v]`` are
    the path vertices at distance one and two from ``v``.
    """

    graph: Graph
    base_n: int
    prime: dict
    double_prime: dict


def build_gadget(base: Graph, constrained: Iterable[int]) -> GadgetGraph:
    edges = list(base.edges)
    prime, double_prime = {}, {}
    nxt = base.n
    for v in sorted(constrained):
        prime[v], double_prime[v] = nxt, nxt + 1
        edges += [(v, nxt), (nxt, nxt + 1)]
        nxt += 2
    return GadgetGraph(new_graph(nxt, edges), base.n, prime, double_prime)


def suitable_rmis(p) -> list[frozenset]:
    """Every suitable robust MIS of the augmented component for problem ``p``.

    ``p`` is a :class:`rmis.labeling.ComponentProblem`; results use gadget ids.
    """
    gadget = build_gadget(p.graph, p.constraints)
    g = gadget.graph
    if g.n > MAX_ENUM_VERTICES:
        raise OracleRefusal(f"gadget has {g.n} vertices, limit is {MAX_ENUM_VERTICES}")
    out = []
    for s in enumerate_mis(g):
        if p.flag == "in" and p.attachment not in s:
            continue
        if p.flag == "out" and p.attachment in s:
            continue
        if not _suitable(p.constraints, gadget, s):
            continue
        if weak_vertices(g, s):
            continue
        out.append(s)
    return out


def _suitable(constraints: dict, gadget: GadgetGraph, s: frozenset) -> bool:
    for v, labels in constraints.items():
        if v in s:
            if not labels.pi:
                return False
        else:
            if not (labels.po or labels.pe):
                return False
            if gadget.prime[v] in s and gadget.double_prime[v] not in s and not labels.po:
                return False
    return True


def suitable_rmis_exists(p) -> bool:
    return bool(suitable_rmis(p))
