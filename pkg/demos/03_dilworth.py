"""Width of a poset three ways: Hopcroft-Karp matching, the chain cover, and a König antichain.

The solver's heavy lifting is exactly this, applied to the containment order
on neighbourhoods.
"""

import numpy as np

from nestchroma import constructions as C
from nestchroma.graph import dedup
from nestchroma.poset import (
    brute_force_width, hasse_dot, height, max_matching, min_chain_cover, poset_from_relations,
    weak_duplicate_poset, width,
)

rng = np.random.default_rng(7)
m = 9
pairs = [(p, q) for p in range(m) for q in range(p + 1, m) if rng.random() < 0.3]
P = poset_from_relations(m, pairs)

M = max_matching(P)
cover = min_chain_cover(P)
w, antichain = width(P)
print(f"{m} elements, {len(pairs)} generating relations")
print("matching size", len(M), "so", m - len(M), "chains:", [list(c) for c in cover.chains])
print("antichain certificate", antichain, "width", w, "subset search", brute_force_width(P))
print("height", height(P))
print(hasse_dot(P))

# Same machinery on a graph: a 4x4 grid de-duplicated first.
grid = C.cartesian_product(C.path(4), C.path(4))
Q = weak_duplicate_poset(dedup(grid).image)
print("\n4x4 grid: width", width(Q)[0], "height", height(Q))
