"""PI/PO/PE labeling of the decomposition tree and the robust-MIS decision.

Labels describe the attachment vertex ``v(x)`` of a node ``x`` relative to
the subgraph ``G[T_x]`` spanned by its subtree:

* PI: some robust MIS of ``G[T_x]`` contains ``v(x)``;
* PO: some robust MIS of ``G[T_x]`` excludes ``v(x)``;
* PE: no PO, but adding a pendant neighbour to ``v(x)`` outside the subtree
  yields a robust MIS that excludes ``v(x)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import twosat
from .decomposition import AbcTree, NodeKind, TreeGraphError, analyze_blocks, build_abc_tree
from .graph import Graph, GraphError, bipartition, connected_components, induced_subgraph, is_connected, new_graph

IN, OUT, NONE = "in", "out", "none"


@dataclass(frozen=True)
class LabelSet:
    pi: bool = False
    po: bool = False
    pe: bool = False

    def __post_init__(self):
        if self.po and self.pe:
            raise ValueError("PO and PE are mutually exclusive")

    @classmethod
    def of(cls, *names: str) -> "LabelSet":
        names = {s.upper() for s in names}
        unknown = names - {"PI", "PO", "PE"}
        if unknown:
            raise ValueError(f"unknown labels {sorted(unknown)}")
        return cls("PI" in names, "PO" in names, "PE" in names)

    @property
    def empty(self) -> bool:
        return not (self.pi or self.po or self.pe)

    def names(self) -> list[str]:
        return [s for s, on in (("PI", self.pi), ("PO", self.po), ("PE", self.pe)) if on]

    def __str__(self) -> str:
        return "{" + ",".join(self.names()) + "}"


EMPTY = LabelSet()
ONLY_PO = LabelSet(po=True)


class LabelingRejected(Exception):
    """Some node received no label, so the graph has no robust MIS."""

    def __init__(self, node: int, labels: dict):
        super().__init__(f"node {node} admits no label")
        self.node = node
        self.labels = labels


# -- rules for pendant, articulation and bridge nodes ------------------------


def label_pendant() -> LabelSet:
    return LabelSet(pi=True, pe=True)


def label_articulation(child_labels: list[LabelSet]) -> LabelSet:
    if not child_labels:
        raise ValueError("an articulation node always has children")
    pi = all(c.pi for c in child_labels)
    po = pe = False
    if all(c.po or c.pe for c in child_labels):
        if any(c.po for c in child_labels):
            po = True
        else:
            pe = True
    return LabelSet(pi, po, pe)


def label_bridge(child: LabelSet) -> LabelSet:
    pi = child.pe or child.po
    po = child.pi
    pe = child.po and not po  # PE is dropped whenever PO is present
    return LabelSet(pi, po, pe)


# -- components --------------------------------------------------------------


@dataclass(frozen=True)
class ComponentProblem:
    """One biconnected component with constraints on its articulation vertices.

    ``graph`` is the component re-indexed densely; ``vertices[i]`` is the
    original id of local vertex ``i``. ``constraints`` maps local ids to
    non-empty label sets and ``attachment`` is the local id of ``v(x)``.
    """

    graph: Graph
    vertices: tuple
    constraints: dict = field(hash=False)
    attachment: Optional[int] = None
    flag: str = NONE

    def __post_init__(self):
        if self.flag not in (IN, OUT, NONE):
            raise ValueError(f"bad flag {self.flag!r}")
        if self.flag != NONE and self.attachment is None:
            raise ValueError("flag in/out needs an attachment vertex")
        for v, labels in self.constraints.items():
            if not 0 <= v < self.graph.n or labels.empty:
                raise ValueError(f"bad constraint {v}: {labels}")

    def with_flag(self, flag: str) -> "ComponentProblem":
        return ComponentProblem(self.graph, self.vertices, self.constraints, self.attachment, flag)

    def key(self) -> tuple:
        """Hashable summary, handy for deduplicating problems."""
        return (
            self.graph.n,
            tuple(self.graph.sorted_edges()),
            tuple(sorted((v, str(l)) for v, l in self.constraints.items())),
            self.attachment,
            self.flag,
        )


@dataclass(frozen=True)
class Satisfiability:
    satisfiable: bool
    assignment: Optional[list] = None
    literals: Optional[dict] = None  # local vertex -> twosat.Literal
    problem: Optional[ComponentProblem] = None

    def __bool__(self) -> bool:
        return self.satisfiable

    def selected_local(self) -> frozenset:
        if not self.satisfiable:
            return frozenset()
        a = self.assignment
        return frozenset(v for v, lit in self.literals.items() if a[lit.var] == lit.positive)

    def selected(self) -> frozenset:
        """Original ids of the component vertices put in the set."""
        return frozenset(self.problem.vertices[v] for v in self.selected_local())


def is_satisfiable(p: ComponentProblem) -> Satisfiability:
    g = p.graph
    po = {v for v, labels in p.constraints.items() if labels.po}
    e_po = [(u, w) for u, w in g.sorted_edges() if u in po and w in po]
    x_graph = new_graph(g.n, g.edges.difference(e_po)) if e_po else g
    side = bipartition(x_graph)
    if side is None:
        return Satisfiability(False, problem=p)

    parts = connected_components(x_graph)
    lit = {}
    for var, part in enumerate(parts):
        for v in part:
            lit[v] = twosat.Literal(var, side[v] == 0)

    clauses = []
    for v in sorted(p.constraints):
        labels = p.constraints[v]
        if labels == LabelSet(pi=True):
            clauses.append((lit[v], lit[v]))
        elif labels in (LabelSet(po=True), LabelSet(pe=True)):
            clauses.append((~lit[v], ~lit[v]))
    for u, w in e_po:
        clauses.append((~lit[u], ~lit[w]))
    if p.flag == IN:
        clauses.append((lit[p.attachment], lit[p.attachment]))
    elif p.flag == OUT:
        clauses.append((~lit[p.attachment], ~lit[p.attachment]))

    assignment = twosat.solve_clauses(len(parts), clauses)
    if assignment is None:
        return Satisfiability(False, literals=lit, problem=p)
    return Satisfiability(True, assignment, lit, p)


def component_problem(
    tree: AbcTree,
    x: int,
    labels: dict,
    flag: str = NONE,
    artificial_parent: bool = False,
    _local=None,
) -> ComponentProblem:
    """Collect the constraints that the labeled children of ``x`` impose.

    The parent of ``x`` is never labeled yet when ``x`` is, so it only
    contributes the artificial PO label used for the PE test.
    """
    node = tree.nodes[x]
    if node.kind is not NodeKind.COMPONENT:
        raise ValueError(f"node {x} is not a component")
    sub, to_global, to_local = _local or induced_subgraph(tree.graph, node.payload)
    constraints = {}
    for c in tree.children[x]:
        lab = labels.get(c, EMPTY)
        if not lab.empty:
            constraints[to_local[tree.attachment[c]]] = lab
    att = tree.attachment[x]
    local_att = None if att is None else to_local[att]
    if artificial_parent:
        if local_att is None:
            raise ValueError("the root has no parent to label")
        constraints[local_att] = ONLY_PO
    return ComponentProblem(sub, tuple(to_global), constraints, local_att, flag)


def label_component(tree: AbcTree, x: int, labels: dict) -> LabelSet:
    if x == tree.root:
        raise ValueError("the root component is decided, not labeled")
    local = induced_subgraph(tree.graph, tree.nodes[x].payload)
    pi = is_satisfiable(component_problem(tree, x, labels, IN, _local=local)).satisfiable
    po = is_satisfiable(component_problem(tree, x, labels, OUT, _local=local)).satisfiable
    pe = False
    if not po:
        pe = is_satisfiable(component_problem(tree, x, labels, OUT, True, _local=local)).satisfiable
    return LabelSet(pi, po, pe)


# -- tree driver -------------------------------------------------------------


def label_node(tree: AbcTree, x: int, labels: dict) -> LabelSet:
    kind = tree.kind(x)
    if kind is NodeKind.PENDANT:
        return label_pendant()
    if kind is NodeKind.ARTICULATION:
        return label_articulation([labels[c] for c in tree.children[x]])
    if kind is NodeKind.BRIDGE:
        (child,) = tree.children[x]
        return label_bridge(labels[child])
    return label_component(tree, x, labels)


def label_subtree(tree: AbcTree, x: int, labels: Optional[dict] = None) -> dict:
    """Label every node under ``x`` bottom-up; raise LabelingRejected on the first empty set."""
    if x == tree.root:
        raise ValueError("label the root's children, not the root")
    labels = {} if labels is None else labels
    for y in tree.postorder(x):
        lab = label_node(tree, y, labels)
        labels[y] = lab
        if lab.empty:
            raise LabelingRejected(y, labels)
    return labels


@dataclass(frozen=True)
class Decision:
    accept: bool
    tree: Optional[AbcTree] = None
    labels: dict = field(default_factory=dict, hash=False)
    root_solution: Optional[Satisfiability] = None
    failed_node: Optional[int] = None

    @property
    def is_tree_graph(self) -> bool:
        return self.tree is None


def decide(g: Graph) -> Decision:
    """Decide whether the connected graph ``g`` admits a robust MIS."""
    if not is_connected(g):
        raise GraphError("decide needs a connected graph; split it into components first")
    if g.n == 0:
        return Decision(True)
    try:
        tree = build_abc_tree(analyze_blocks(g), g)
    except TreeGraphError:
        return Decision(True)
    labels: dict = {}
    try:
        for c in tree.children[tree.root]:
            label_subtree(tree, c, labels)
    except LabelingRejected as exc:
        return Decision(False, tree, labels, failed_node=exc.node)
    root = is_satisfiable(component_problem(tree, tree.root, labels, NONE))
    return Decision(root.satisfiable, tree, labels, root, None if root else tree.root)
