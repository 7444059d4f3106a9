"""Block decomposition and the rooted articulation/bridge/component tree.

The tree has four node kinds: pendant vertices (P), articulation points (A),
bridges (B) and biconnected components with at least three vertices (C).
Articulation points are joined to the components containing them, and
articulation or pendant vertices are joined to the bridges they end.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Optional, Union

from .graph import Edge, Graph, GraphError, VertexSet, canonical_edge, is_connected


class NodeKind(str, enum.Enum):
    PENDANT = "P"
    ARTICULATION = "A"
    BRIDGE = "B"
    COMPONENT = "C"


class TreeGraphError(ValueError):
    """The graph has no biconnected component, so there is nothing to root at."""


@dataclass(frozen=True)
class BlockAnalysis:
    articulation_points: VertexSet
    bridges: frozenset  # frozenset[Edge]
    components: tuple  # tuple[VertexSet, ...], each of size >= 3
    pendants: VertexSet


def analyze_blocks(g: Graph) -> BlockAnalysis:
    """Hopcroft-Tarjan lowpoint DFS over a connected graph.

    Two-vertex blocks are reported as bridges, never as components.
    """
    if g.n == 0 or not is_connected(g):
        raise GraphError("analyze_blocks needs a connected graph with at least one vertex")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    articulation = set()
    blocks: list[set[int]] = []
    edge_stack: list[Edge] = []
    counter = 0

    root = 0
    disc[root] = low[root] = counter
    counter += 1
    root_children = 0
    # frames: (vertex, parent, next neighbour index)
    stack = [[root, -1, 0]]
    while stack:
        frame = stack[-1]
        u, parent, i = frame
        nbrs = g.adjacency[u]
        if i < len(nbrs):
            frame[2] = i + 1
            w = nbrs[i]
            if disc[w] == -1:
                edge_stack.append((u, w))
                disc[w] = low[w] = counter
                counter += 1
                if u == root:
                    root_children += 1
                stack.append([w, u, 0])
            elif w != parent and disc[w] < disc[u]:
                edge_stack.append((u, w))
                if disc[w] < low[u]:
                    low[u] = disc[w]
            continue
        stack.pop()
        if parent == -1:
            continue
        if low[u] < low[parent]:
            low[parent] = low[u]
        if low[u] >= disc[parent]:
            if parent != root:
                articulation.add(parent)
            block = set()
            while True:
                a, b = edge_stack.pop()
                block.add(a)
                block.add(b)
                if (a, b) == (parent, u):
                    break
            blocks.append(block)
    if root_children >= 2:
        articulation.add(root)

    bridges = set()
    components = []
    for block in blocks:
        if len(block) == 2:
            bridges.add(canonical_edge(*block))
        else:
            components.append(frozenset(block))
    components.sort(key=sorted)
    pendants = frozenset(v for v in range(n) if g.degree(v) == 1)
    return BlockAnalysis(frozenset(articulation), frozenset(bridges), tuple(components), pendants)


def is_biconnected(g: Graph) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    return not analyze_blocks(g).articulation_points


@dataclass(frozen=True)
class AbcNode:
    kind: NodeKind
    payload: Union[int, Edge, VertexSet]

    def vertices(self) -> VertexSet:
        if self.kind in (NodeKind.PENDANT, NodeKind.ARTICULATION):
            return frozenset((self.payload,))
        return frozenset(self.payload)

    def describe(self) -> str:
        if self.kind is NodeKind.COMPONENT:
            return "C{" + ",".join(map(str, sorted(self.payload))) + "}"
        if self.kind is NodeKind.BRIDGE:
            return "B(%d,%d)" % self.payload
        return f"{self.kind.value}({self.payload})"


@dataclass(frozen=True)
class AbcTree:
    """Rooted tree; node 0 is the root and ids follow BFS order from it."""

    graph: Graph
    nodes: tuple  # tuple[AbcNode, ...]
    parent: tuple  # tuple[Optional[int], ...]
    children: tuple  # tuple[tuple[int, ...], ...]
    attachment: tuple  # tuple[Optional[int], ...], None at the root
    root: int = 0

    def __len__(self) -> int:
        return len(self.nodes)

    def kind(self, x: int) -> NodeKind:
        return self.nodes[x].kind

    def find(self, kind: NodeKind, payload) -> int:
        for i, node in enumerate(self.nodes):
            if node.kind is kind and node.payload == payload:
                return i
        raise KeyError((kind, payload))

    def postorder(self, x: Optional[int] = None) -> list[int]:
        """Nodes of the subtree at ``x`` (whole tree by default), children first."""
        start = self.root if x is None else x
        out = []
        stack = [(start, False)]
        while stack:
            y, done = stack.pop()
            if done:
                out.append(y)
                continue
            stack.append((y, True))
            for c in reversed(self.children[y]):
                stack.append((c, False))
        return out

    def subtree_vertices(self, x: int) -> VertexSet:
        vs = set()
        for y in self.postorder(x):
            vs |= self.nodes[y].vertices()
        return frozenset(vs)

    def subtree_edges(self, x: int) -> frozenset:
        """Edges of G[T_x]: bridges and component edges found below ``x``."""
        g = self.graph
        out = set()
        for y in self.postorder(x):
            node = self.nodes[y]
            if node.kind is NodeKind.BRIDGE:
                out.add(node.payload)
            elif node.kind is NodeKind.COMPONENT:
                comp = node.payload
                out.update(e for e in g.edges if e[0] in comp and e[1] in comp)
        return frozenset(out)


_KIND_ORDER = {NodeKind.COMPONENT: 0, NodeKind.ARTICULATION: 1, NodeKind.BRIDGE: 2, NodeKind.PENDANT: 3}


def build_abc_tree(analysis: BlockAnalysis, g: Graph) -> AbcTree:
    """Assemble and root the tree at the component holding the smallest vertex id."""
    if not analysis.components:
        raise TreeGraphError("graph has no biconnected component (it is a tree)")
    raw: list[AbcNode] = [AbcNode(NodeKind.COMPONENT, c) for c in analysis.components]
    raw += [AbcNode(NodeKind.ARTICULATION, a) for a in sorted(analysis.articulation_points)]
    raw += [AbcNode(NodeKind.BRIDGE, b) for b in sorted(analysis.bridges)]
    raw += [AbcNode(NodeKind.PENDANT, p) for p in sorted(analysis.pendants)]
    vertex_node = {node.payload: i for i, node in enumerate(raw) if node.kind in (NodeKind.ARTICULATION, NodeKind.PENDANT)}

    adj: list[list[int]] = [[] for _ in raw]
    for i, node in enumerate(raw):
        if node.kind is NodeKind.COMPONENT:
            for v in sorted(node.payload):
                if v in analysis.articulation_points:
                    j = vertex_node[v]
                    adj[i].append(j)
                    adj[j].append(i)
        elif node.kind is NodeKind.BRIDGE:
            for v in node.payload:
                j = vertex_node.get(v)
                if j is None:
                    raise GraphError(f"bridge endpoint {v} is neither articulation nor pendant")
                adj[i].append(j)
                adj[j].append(i)

    root = min(range(len(analysis.components)), key=lambda i: (min(raw[i].payload), sorted(raw[i].payload)))
    order = [root]
    old_parent = {root: None}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x], key=lambda j: (_KIND_ORDER[raw[j].kind], j)):
            if y not in old_parent:
                old_parent[y] = x
                order.append(y)
                queue.append(y)
    if len(order) != len(raw):
        raise GraphError("decomposition is not connected; was the graph connected?")

    new_id = {old: new for new, old in enumerate(order)}
    nodes = tuple(raw[old] for old in order)
    parent = tuple(None if old_parent[old] is None else new_id[old_parent[old]] for old in order)
    children: list[list[int]] = [[] for _ in nodes]
    for x, p in enumerate(parent):
        if p is not None:
            children[p].append(x)
    attachment: list[Optional[int]] = [None] * len(nodes)
    for x in range(1, len(nodes)):  # BFS order: parents resolved first
        node = nodes[x]
        if node.kind in (NodeKind.ARTICULATION, NodeKind.PENDANT):
            attachment[x] = node.payload
        else:
            attachment[x] = attachment[parent[x]]
    return AbcTree(g, nodes, parent, tuple(map(tuple, children)), tuple(attachment), 0)


def abc_tree(g: Graph) -> AbcTree:
    return build_abc_tree(analyze_blocks(g), g)
