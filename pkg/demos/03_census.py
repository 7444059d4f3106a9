"""Count how small connected graphs split between the three robustness classes."""

import itertools
from collections import Counter

from rmis import classify
from rmis.graph import is_connected, new_graph

for n in range(1, 7):
    pairs = list(itertools.combinations(range(n), 2))
    tally, evidence = Counter(), Counter()
    for mask in range(1 << len(pairs)):
        g = new_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if not is_connected(g):
            continue
        c = classify(g)
        tally[c.tag.value] += 1
        evidence[c.evidence] += 1
    total = sum(tally.values())
    row = "  ".join(f"{k}={tally[k]}" for k in ("ALL_ROBUST", "SOME_ROBUST", "NONE_ROBUST"))
    print(f"n={n}: {total:6d} labeled graphs  {row}")
    print("       by evidence:", dict(sorted(evidence.items())))
