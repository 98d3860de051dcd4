"""A triangle with a pendant path and two twin leaves.

Its chromatic number is 3, yet no 3-colouring has every class ordered by
neighbourhood containment.  Run: python3 demos/01_first_example.py
"""

from nestchroma import constructions as C
from nestchroma.graph import dedup, open_neighbourhood
from nestchroma.nested_coloring import (
    brute_force_nested_chromatic, chromatic_number_exact, first_bad_class, nested_chromatic_number,
)
from nestchroma.poset import hasse_dot, weak_duplicate_poset

G = C.first_example()
name = G.label

for v in range(G.n):
    print(f"N({name(v)}) = {{{', '.join(name(u) for u in sorted(open_neighbourhood(G, v)))}}}")

# An ordinary 3-colouring exists ...
three = [[0, 3], [1], [2, 4, 5]]
bad = first_bad_class(G, three)
print("\n3-colouring", [[name(v) for v in c] for c in three],
      "fails at class", [name(v) for v in three[bad]])
print("chi =", chromatic_number_exact(G))

# ... but the vertices 1 and 4 see disjoint neighbourhoods, so they cannot share a nested class.
k, colouring = nested_chromatic_number(G)
print("\nchi_N =", k, "(brute force:", brute_force_nested_chromatic(G), ")")
for i, cls in enumerate(colouring.classes, 1):
    print(f"  class {i}: " + " >= ".join(name(v) for v in cls))

m = dedup(G)
print("\nduplicate classes:", [[name(v) for v in c] for c in m.classes if len(c) > 1])
print(hasse_dot(weak_duplicate_poset(m.image)))
