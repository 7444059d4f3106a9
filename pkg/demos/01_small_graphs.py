"""Three tiny graphs with three different answers.

Run: python3 demos/01_small_graphs.py
"""

from rmis import classify, construct, decide
from rmis.graph import bull_graph, cycle_graph
from rmis.oracle import enumerate_mis, weak_vertices

graphs = {
    "triangle": cycle_graph(3),
    "bull": bull_graph(),
    "square": cycle_graph(4),
}

for name, g in graphs.items():
    print(f"== {name}: {g.n} vertices, edges {g.sorted_edges()}")
    for m in enumerate_mis(g):
        weak = weak_vertices(g, m)
        verdict = "robust" if not weak else f"fragile, weak vertices {sorted(weak)}"
        print(f"   MIS {sorted(m)}: {verdict}")
    d = decide(g)
    w = construct(g)
    print(f"   decide -> {'YES' if d.accept else 'NO'}; witness -> {w.sorted() if w else None}")
    print(f"   classify -> {classify(g)}")
    print()

# In the triangle every vertex can lose its only selected neighbour by dropping one
# edge of the cycle. The bull keeps its two pendants selected, which pins everything.
