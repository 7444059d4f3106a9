"""Solving one biconnected component under constraints from its subtrees.

The 8-vertex fixture below is a ring with one chord. Four of its vertices are
articulation points whose hanging subtrees restrict how they may be treated.
"""

from rmis.generators import fixture_component_b
from rmis.labeling import IN, OUT, ComponentProblem, LabelSet, is_satisfiable
from rmis.oracle import suitable_rmis_exists

g, ids = fixture_component_b()
at = {v: i for i, v in enumerate(ids)}
print("vertices (original ids):", ids)
print("edges:", [(ids[u], ids[v]) for u, v in g.sorted_edges()])

constraints = {
    at[2]: LabelSet.of("PI", "PO"),
    at[6]: LabelSet.of("PI", "PO"),
    at[8]: LabelSet.of("PI"),
    at[11]: LabelSet.of("PI", "PO"),
}
print("constraints:", {ids[v]: str(lab) for v, lab in constraints.items()})
print("attachment vertex: 10\n")

cases = [
    ("attachment inside", ComponentProblem(g, tuple(ids), constraints, at[10], IN)),
    ("attachment outside", ComponentProblem(g, tuple(ids), constraints, at[10], OUT)),
    (
        "outside, covered from above",
        ComponentProblem(g, tuple(ids), {**constraints, at[10]: LabelSet.of("PO")}, at[10], OUT),
    ),
]
for name, p in cases:
    res = is_satisfiable(p)
    chosen = sorted(res.selected()) if res else None
    print(f"{name:30s} 2-SAT: {res.satisfiable!s:5s} selected: {chosen}  brute force: {suitable_rmis_exists(p)}")
