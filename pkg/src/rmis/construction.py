"""Build an explicit robust MIS from an accepting decision.

The labeled tree is walked again from the root. Each node receives the
status its attachment vertex must have and picks a compatible label,
preferring PI, then PO, then PE. Components are re-solved with the matching
flag to learn which inner vertices are selected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .decomposition import NodeKind
from .graph import Graph, GraphError, bipartition, is_connected, split_components
from .labeling import IN, OUT, Decision, component_problem, decide, is_satisfiable

# status of an attachment vertex handed down to a node
INCLUDED = "in"
COVERED_ABOVE = "out-covered"  # excluded, a selected neighbour exists outside the subtree
UNCOVERED = "out-uncovered"  # excluded, must be covered from inside the subtree


class ConstructionError(RuntimeError):
    """The labels do not support the requested status; indicates a labeling defect."""


@dataclass(frozen=True)
class RmisWitness:
    vertices: frozenset
    choices: dict = field(default_factory=dict, hash=False)  # node id -> label chosen

    def sorted(self) -> list[int]:
        return sorted(self.vertices)


def greedy_mis(g: Graph) -> frozenset:
    chosen: set[int] = set()
    for v in range(g.n):
        if not any(w in chosen for w in g.adjacency[v]):
            chosen.add(v)
    return frozenset(chosen)


def bipartite_rmis(g: Graph) -> RmisWitness:
    """The bipartition side holding vertex 0: every vertex on the other side keeps a neighbour in it."""
    if not is_connected(g):
        raise GraphError("bipartite_rmis needs a connected graph")
    side = bipartition(g)
    if side is None:
        raise GraphError("graph is not bipartite")
    return RmisWitness(frozenset(v for v, s in side.items() if s == 0))


def _pick(labels, status: str, node: int) -> str:
    if status == INCLUDED and labels.pi:
        return "PI"
    if status != INCLUDED and labels.po:
        return "PO"
    if status == COVERED_ABOVE and labels.pe:
        return "PE"
    raise ConstructionError(f"node {node} labeled {labels} cannot take status {status}")


def _status_in_component(v: int, selected: frozenset, g: Graph, comp: frozenset) -> str:
    if v in selected:
        return INCLUDED
    if any(w in selected for w in g.adjacency[v] if w in comp):
        return COVERED_ABOVE
    return UNCOVERED


def extract_rmis(g: Graph, d: Decision) -> RmisWitness:
    if not d.accept:
        raise ValueError("no robust MIS to extract from a rejecting decision")
    if d.tree is None:
        return RmisWitness(greedy_mis(g))
    tree, labels = d.tree, d.labels
    root_sel = d.root_solution.selected()
    chosen: set[int] = set(root_sel)
    choices: dict = {}
    root_comp = tree.nodes[tree.root].payload

    work = [(c, _status_in_component(tree.attachment[c], root_sel, g, root_comp)) for c in tree.children[tree.root]]
    while work:
        x, status = work.pop()
        node = tree.nodes[x]
        lab = _pick(labels[x], status, x)
        choices[x] = lab
        v = tree.attachment[x]
        if status == INCLUDED:
            chosen.add(v)

        if node.kind is NodeKind.PENDANT:
            continue

        if node.kind is NodeKind.ARTICULATION:
            kids = tree.children[x]
            if status == INCLUDED:
                work += [(c, INCLUDED) for c in kids]
                continue
            # one PO child covers v(x) from below; the rest then see it covered
            inner = next((c for c in kids if labels[c].po), None) if status == UNCOVERED else None
            for c in kids:
                work.append((c, UNCOVERED if c == inner else COVERED_ABOVE))
            continue

        if node.kind is NodeKind.BRIDGE:
            (c,) = tree.children[x]
            if status == INCLUDED:
                work.append((c, COVERED_ABOVE))
            elif status == UNCOVERED or labels[c].pi:
                work.append((c, INCLUDED))
            else:
                work.append((c, UNCOVERED))
            continue

        # component: re-solve with the flag implied by the chosen label
        if lab == "PI":
            problem = component_problem(tree, x, labels, IN)
        else:
            problem = component_problem(tree, x, labels, OUT, artificial_parent=(lab == "PE"))
        sol = is_satisfiable(problem)
        if not sol:
            raise ConstructionError(f"component node {x} unsatisfiable for label {lab}")
        sel = sol.selected()
        chosen |= sel
        comp = node.payload
        for c in tree.children[x]:
            work.append((c, _status_in_component(tree.attachment[c], sel, g, comp)))
    return RmisWitness(frozenset(chosen), choices)


def construct(g: Graph) -> Optional[RmisWitness]:
    """Robust MIS of a possibly disconnected graph, solved per component, or None."""
    found: set[int] = set()
    for sub, to_global in split_components(g):
        d = decide(sub)
        if not d.accept:
            return None
        w = extract_rmis(sub, d)
        found |= {to_global[v] for v in w.vertices}
    return RmisWitness(frozenset(found))
