"""Closed forms for named families and graph operations, checked against the solver."""

from math import comb

from nestchroma import constructions as C
from nestchroma.graph import leaf_classes
from nestchroma.nested_coloring import chi_nested


def row(label, G, expected):
    got = chi_nested(G)
    mark = "ok" if got == expected else "MISMATCH"
    print(f"{label:<28} n={G.n:<4} chi_N={got:<5} expected {expected:<5} {mark}")


print("cycles and their complements")
for n in (3, 4, 5, 8, 12):
    row(f"C_{n}", C.cycle(n), {3: 3, 4: 2}.get(n, n))
for n in (5, 9):
    row(f"complement of C_{n}", C.anticycle(n), n)

print("\npaths: small ones are 2-colourable with nesting, long ones lose two")
for n in (2, 4, 5, 6, 10):
    row(f"P_{n}", C.path(n), 2 if n <= 4 else 4 if n == 5 else n - 2)

print("\nKneser graphs and hypercubes")
for n, k in [(5, 2), (6, 2), (7, 3)]:
    row(f"KG({n},{k})", C.kneser(n, k), comb(n, k))
for n in (1, 2, 3, 4):
    row(f"Q_{n}", C.cube(n), 2 if n == 2 else 2 ** n)

print("\nMycielski graphs roughly double each step")
for k in range(2, 7):
    row(f"M_{k}", C.mycielski_graph(k), 3 * 2 ** (k - 2) - 1)

print("\nproducts")
G, H = C.path(4), C.paw()
row("P4 x paw (direct)", C.direct_product(G, H), 8)
row("P4 [] C5 (Cartesian)", C.cartesian_product(G, C.cycle(5)),
    4 * 5 - leaf_classes(G) * leaf_classes(C.cycle(5)))
row("P3 [] P3 (Cartesian)", C.cartesian_product(C.path(3), C.path(3)), 9 - 1)
row("C4 strong P3", C.strong_product(C.cycle(4), C.path(3)), 12)
row("P3[C5] (composition)", C.composition(C.path(3), C.cycle(5)), 3 * 5)
row("crown K_5 x K_2", C.crown(5), 10)
