"""Graph families and graph operations.

Product graphs index the pair ``(g, h)`` as ``g * H.n + h``.  Kneser vertices
are ``k``-subsets in colex order.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

import numpy as np

from .graph import Graph, GraphError, bits, build_graph, complement


def _need(cond: bool, msg: str):
    if not cond:
        raise GraphError(msg)


def empty(n: int) -> Graph:
    return build_graph(n)


def complete(n: int) -> Graph:
    _need(n >= 0, "complete graph needs n >= 0")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    _need(all(p >= 1 for p in parts), "part sizes must be positive")
    n = sum(parts)
    full = (1 << n) - 1
    rows = []
    start = 0
    for p in parts:
        block = ((1 << p) - 1) << start
        rows += [full & ~block] * p
        start += p
    return Graph(n, tuple(rows))


def turan(n: int, r: int) -> Graph:
    """Complete ``r``-partite graph on ``n`` vertices with parts as equal as possible."""
    _need(1 <= r <= n, "Turan graph needs 1 <= r <= n")
    q, extra = divmod(n, r)
    return complete_multipartite([q + 1] * extra + [q] * (r - extra))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def anticycle(n: int) -> Graph:
    return complement(cycle(n))


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def add_dominating_vertex(G: Graph) -> Graph:
    """``G`` plus a new last vertex adjacent to everything."""
    n = G.n
    rows = tuple(row | 1 << n for row in G.adj) + ((1 << n) - 1,)
    return Graph(n + 1, rows)


def star(n: int) -> Graph:
    """``n`` independent leaves joined to a centre (the last vertex)."""
    _need(n >= 0, "star needs n >= 0")
    return add_dominating_vertex(empty(n))


def wheel(n: int) -> Graph:
    """Cycle ``C_n`` plus a hub; ``n + 1`` vertices."""
    return add_dominating_vertex(cycle(n))


def windmill(k: int, n: int) -> Graph:
    """``n`` disjoint copies of ``K_k`` plus a common dominating vertex."""
    _need(k >= 1 and n >= 1, "windmill needs k, n >= 1")
    G = empty(0)
    for _ in range(n):
        G = disjoint_union(G, complete(k))
    return add_dominating_vertex(G)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def kneser(n: int, k: int) -> Graph:
    """Disjointness graph on the ``k``-subsets of ``range(n)``."""
    _need(k >= 1 and n >= 2 * k, "Kneser graph needs n >= 2k >= 2")
    subsets = sorted(combinations(range(n), k), key=lambda s: s[::-1])
    masks = [sum(1 << i for i in s) for s in subsets]
    edges = [(a, b) for a, b in combinations(range(len(masks)), 2) if not masks[a] & masks[b]]
    return build_graph(len(masks), edges)


def cube(n: int) -> Graph:
    """Hypercube ``Q_n``: ``Q_1 = K_2`` and ``Q_n = Q_{n-1} [] K_2``."""
    _need(n >= 1, "cube needs n >= 1")
    G = complete(2)
    for _ in range(n - 1):
        G = cartesian_product(G, complete(2))
    return G


def crown(n: int) -> Graph:
    """``K_n x K_2``: ``K_{n,n}`` minus a perfect matching."""
    _need(n >= 1, "crown needs n >= 1")
    return direct_product(complete(n), complete(2))


def nested_bipartite(a: Sequence[int], s: int) -> Graph:
    """Bipartite graph with ``u_i ~ v_j`` iff ``j <= a_i`` (1-based).

    ``a`` must satisfy ``1 <= a[-1] <= ... <= a[0] <= s``.  Vertices
    ``0..r-1`` are the ``u_i`` and ``r..r+s-1`` are the ``v_j``.
    """
    a = list(a)
    r = len(a)
    _need(r >= 1 and s >= 1, "need at least one vertex on each side")
    _need(all(x >= y for x, y in zip(a, a[1:])), "sequence must be weakly decreasing")
    _need(1 <= a[-1] and a[0] <= s, "entries must lie in 1..s")
    return build_graph(r + s, [(i, r + j) for i in range(r) for j in range(a[i])])


ISOLATED, DOMINATING = "i", "d"


def threshold(script: Sequence[str]) -> Graph:
    """Threshold graph grown from one vertex by isolated/dominating additions.

    Each step is ``"i"``/``"isolated"`` or ``"d"``/``"dominating"``.
    """
    _need(len(script) > 0, "threshold script must contain at least one step")
    G = empty(1)
    for step in script:
        step = str(step).lower()[:1]
        if step == ISOLATED:
            G = disjoint_union(G, empty(1))
        elif step == DOMINATING:
            G = add_dominating_vertex(G)
        else:
            raise GraphError(f"unknown threshold step {step!r}")
    return G


def mycielski(G: Graph) -> Graph:
    """Mycielskian: ``u_i = i``, shadow ``v_i = n + i``, apex ``w = 2n``."""
    n = G.n
    edges = list(G.edges())
    edges += [(i, n + j) for i in range(n) for j in bits(G.adj[i])]
    edges += [(2 * n, n + i) for i in range(n)]
    return build_graph(2 * n + 1, edges)


def mycielski_graph(k: int) -> Graph:
    """``M_2 = K_2`` and ``M_{k+1} = mu(M_k)``."""
    _need(k >= 2, "Mycielski family starts at k = 2")
    G = complete(2)
    for _ in range(k - 2):
        G = mycielski(G)
    return G


def disjoint_union(G: Graph, H: Graph) -> Graph:
    return Graph(G.n + H.n, G.adj + tuple(row << G.n for row in H.adj))


def join(G: Graph, H: Graph) -> Graph:
    all_h = ((1 << H.n) - 1) << G.n
    all_g = (1 << G.n) - 1
    return Graph(G.n + H.n, tuple(row | all_h for row in G.adj)
                 + tuple(row << G.n | all_g for row in H.adj))


def _spread(G: Graph, H: Graph, g_mask: int, h_mask: int) -> int:
    """Bitmask of ``{(g, h) : g in g_mask, h in h_mask}``."""
    out = 0
    for g in bits(g_mask):
        out |= h_mask << (g * H.n)
    return out


def _product(G: Graph, H: Graph, nbhd) -> Graph:
    rows = []
    for g in range(G.n):
        for h in range(H.n):
            rows.append(nbhd(g, h))
    return Graph(G.n * H.n, tuple(rows))


def direct_product(G: Graph, H: Graph) -> Graph:
    return _product(G, H, lambda g, h: _spread(G, H, G.adj[g], H.adj[h]))


def cartesian_product(G: Graph, H: Graph) -> Graph:
    return _product(G, H, lambda g, h: _spread(G, H, 1 << g, H.adj[h])
                    | _spread(G, H, G.adj[g], 1 << h))


def strong_product(G: Graph, H: Graph) -> Graph:
    def nbhd(g, h):
        closed = _spread(G, H, G.adj[g] | 1 << g, H.adj[h] | 1 << h)
        return closed & ~(1 << (g * H.n + h))
    return _product(G, H, nbhd)


def composition(G: Graph, H: Graph) -> Graph:
    """Lexicographic product ``G[H]``."""
    all_h = (1 << H.n) - 1
    return _product(G, H, lambda g, h: _spread(G, H, G.adj[g], all_h)
                    | _spread(G, H, 1 << g, H.adj[h]))


def erdos_renyi(n: int, p: float, seed=None) -> Graph:
    """Uniform random graph ``G(n, p)``."""
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, 1)
    a = upper | upper.T
    rows = tuple(int(sum(1 << int(u) for u in np.flatnonzero(a[v]))) for v in range(n))
    return Graph(n, rows)


def first_example() -> Graph:
    """Six-vertex graph with chromatic number 3 but nested chromatic number 4.

    Edges 12, 13, 23, 34, 45, 46 in 1-based labels; here shifted to 0-based.
    """
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5)],
                       labels=[str(i) for i in range(1, 7)])


def paw() -> Graph:
    """Triangle 123 with pendant edge 34 (1-based), 0-based here."""
    return build_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def diamond() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
