"""Canonical labelling of small graphs by individualisation and refinement.

The canonical code of a graph is the smallest upper-triangle bit string
(graph6 bit order, first bit most significant) over all leaves of the search
tree.  Refinement splits cells by neighbour counts into earlier cells, so the
tree, and therefore the code, depends only on the isomorphism class.
Branches are skipped when they are images of explored ones under a known
automorphism: transpositions of twin vertices and automorphisms discovered
at equal leaves.
"""

from __future__ import annotations

from .graph import Graph, popcount, relabel


def _refine(adj, cells):
    while True:
        for splitter in cells:
            smask = 0
            for v in splitter:
                smask |= 1 << v
            out = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(popcount(adj[v] & smask), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split = True
                    out.extend(groups[k] for k in sorted(groups))
            if split:
                cells = out
                break
        else:
            return cells


def _code(adj, perm):
    code = 0
    n = len(perm)
    for j in range(1, n):
        row = adj[perm[j]]
        for i in range(j):
            code = code << 1 | (row >> perm[i] & 1)
    return code


def _twin_generators(adj, n):
    gens = []
    for keyfn in (lambda v: adj[v], lambda v: adj[v] | 1 << v):
        first: dict[int, int] = {}
        for v in range(n):
            k = keyfn(v)
            if k in first:
                g = list(range(n))
                g[first[k]], g[v] = v, first[k]
                gens.append(g)
            else:
                first[k] = v
    return gens


def _orbit_rep(gens, fixed, n):
    """Union-find orbit representatives under the generators fixing ``fixed`` pointwise."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if any(g[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return find


def canonical_labelling(G: Graph) -> tuple[int, list[int], list[list[int]]]:
    """Return ``(code, perm, generators)``.

    ``perm[i]`` is the original vertex at canonical position ``i``;
    ``generators`` are automorphisms found along the way (as vertex maps).
    """
    n = G.n
    adj = G.adj
    if n <= 1:
        return 0, list(range(n)), []
    gens = _twin_generators(adj, n)
    best_code = None
    best_perm = None
    init = _refine(adj, [list(range(n))])

    def search(cells, fixed):
        nonlocal best_code, best_perm
        cells = _refine(adj, cells)
        t = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if t is None:
            perm = [c[0] for c in cells]
            code = _code(adj, perm)
            if best_code is None or code < best_code:
                best_code, best_perm = code, perm
            elif code == best_code:
                g = [0] * n
                for i in range(n):
                    g[perm[i]] = best_perm[i]
                gens.append(g)
            return
        cell = cells[t]
        done: list[int] = []
        for v in cell:
            if done:
                find = _orbit_rep(gens, fixed, n)
                root = find(v)
                if any(find(u) == root for u in done):
                    continue
            rest = [u for u in cell if u != v]
            search(cells[:t] + [[v], rest] + cells[t + 1:], fixed + [v])
            done.append(v)

    search(init, [])
    return best_code, best_perm, gens


def canonical_code(G: Graph) -> int:
    return canonical_labelling(G)[0]


def canonical_form(G: Graph) -> Graph:
    """Isomorphic copy of ``G`` in canonical labelling."""
    _, perm, _ = canonical_labelling(G)
    inv = [0] * G.n
    for i, v in enumerate(perm):
        inv[v] = i
    return relabel(G, inv)


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.num_edges == H.num_edges and canonical_code(G) == canonical_code(H)


__all__ = ["canonical_labelling", "canonical_code", "canonical_form", "are_isomorphic"]
