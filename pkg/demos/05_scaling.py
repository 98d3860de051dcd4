"""Wall-clock time of the solver on dense random graphs.

The bottleneck is one boolean matrix product for the containment relation plus
a bipartite matching, so doubling n should cost well under 10x.
"""

import time

from nestchroma import constructions as C
from nestchroma.nested_coloring import chi_nested

prev = None
for n in (125, 250, 500, 1000):
    G = C.erdos_renyi(n, 0.5, seed=n)
    t = time.perf_counter()
    k = chi_nested(G)
    dt = time.perf_counter() - t
    ratio = f"{dt / prev:.1f}x" if prev else ""
    print(f"n={n:<5} chi_N={k:<5} {dt:7.3f}s {ratio}")
    prev = dt
