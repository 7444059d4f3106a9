"""Three-way classification: all, some, or no maximal independent sets robust."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .construction import extract_rmis
from .decomposition import analyze_blocks, is_biconnected
from .graph import Graph, bipartition
from .labeling import decide


class Robustness(str, enum.Enum):
    ALL_ROBUST = "ALL_ROBUST"
    SOME_ROBUST = "SOME_ROBUST"
    NONE_ROBUST = "NONE_ROBUST"


@dataclass(frozen=True)
class RobustnessClass:
    tag: Robustness
    evidence: str  # complete-bipartite | sputnik | tree | witness | biconnected-non-bipartite | algorithm-reject
    witness: Optional[frozenset] = None

    def __str__(self) -> str:
        text = f"{self.tag.value} {self.evidence}"
        if self.witness is not None:
            text += " " + ",".join(map(str, sorted(self.witness)))
        return text


def is_complete_bipartite(g: Graph) -> bool:
    side = bipartition(g)
    if side is None:
        return False
    left = sum(1 for s in side.values() if s == 0)
    return g.m == left * (g.n - left)


def on_cycle_vertices(g: Graph) -> frozenset:
    """Vertices with at least one non-bridge edge, i.e. lying on some cycle."""
    if g.n == 0:
        return frozenset()
    bridges = analyze_blocks(g).bridges
    return frozenset(v for e in g.edges if e not in bridges for v in e)


def is_sputnik(g: Graph) -> bool:
    """Every vertex on a cycle has a pendant neighbour (an antenna)."""
    return all(
        any(g.degree(w) == 1 for w in g.adjacency[v]) for v in on_cycle_vertices(g)
    )


def all_mis_robust(g: Graph) -> bool:
    return is_complete_bipartite(g) or is_sputnik(g)


def biconnected_shortcut(g: Graph) -> Optional[bool]:
    """For biconnected graphs a robust MIS exists iff the graph is bipartite; None otherwise."""
    if not is_biconnected(g):
        return None
    return bipartition(g) is not None


def classify(g: Graph) -> RobustnessClass:
    if is_complete_bipartite(g):
        return RobustnessClass(Robustness.ALL_ROBUST, "complete-bipartite")
    if g.m == g.n - 1:
        return RobustnessClass(Robustness.ALL_ROBUST, "tree")
    if is_sputnik(g):
        return RobustnessClass(Robustness.ALL_ROBUST, "sputnik")
    d = decide(g)
    if d.accept:
        return RobustnessClass(Robustness.SOME_ROBUST, "witness", extract_rmis(g, d).vertices)
    if is_biconnected(g):
        return RobustnessClass(Robustness.NONE_ROBUST, "biconnected-non-bipartite")
    return RobustnessClass(Robustness.NONE_ROBUST, "algorithm-reject")
