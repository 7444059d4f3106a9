"""Wall time of the decision procedure as the graph grows."""

import time

from rmis import decide
from rmis.generators import random_bipartite_connected, random_connected_avg_degree


def best_of(g, k=3):
    t = float("inf")
    for _ in range(k):
        s = time.perf_counter()
        d = decide(g)
        t = min(t, time.perf_counter() - s)
    return t, d.accept


print(f"{'n':>6} {'random deg 4':>14} {'bipartite':>14}")
for n in (250, 500, 1000, 2000, 4000, 8000):
    t1, a1 = best_of(random_connected_avg_degree(n, 4, seed=n))
    t2, a2 = best_of(random_bipartite_connected(n, n // 5, seed=n))
    print(f"{n:6d} {t1:9.4f}s {'Y' if a1 else 'N'}   {t2:9.4f}s {'Y' if a2 else 'N'}")
