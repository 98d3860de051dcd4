"""Nested colourings: verification, the exact solver, and brute-force oracles.

A colour class is *nested* when it is independent and its vertices can be
listed so that each later vertex's open neighbourhood is contained in every
earlier one's.  The solver reduces the problem to a minimum chain cover of
the weak-duplicate poset of the de-duplicated graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, bits, dedup, delete_vertex, induced_subgraph, popcount
from .poset import min_chain_cover, weak_duplicate_poset


@dataclass(frozen=True)
class NestedColoring:
    """Ordered colour classes; within a class, later vertices are weak duplicates of earlier ones."""

    classes: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.classes)

    def colour_of(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}


def nested_order(G: Graph, S: Iterable[int]) -> list[int] | None:
    """Order ``S`` by decreasing neighbourhood, or ``None`` if ``S`` is not nested independent."""
    S = sorted(S, key=lambda v: (-popcount(G.adj[v]), v))
    members = 0
    for v in S:
        members |= 1 << v
    for v in S:
        if G.adj[v] & members:
            return None
    for a, b in zip(S, S[1:]):
        if G.adj[b] & ~G.adj[a]:
            return None
    return S


def is_nested_independent(G: Graph, S: Iterable[int]) -> bool:
    return nested_order(G, S) is not None


def _exchange_condition(G: Graph, ordered: Sequence[int]) -> bool:
    # every edge uw at a later u is also an edge vw at each earlier v (forces independence too)
    for i, v in enumerate(ordered):
        for u in ordered[i + 1:]:
            for w in bits(G.adj[u]):
                if w == v or not G.adj[v] >> w & 1:
                    return False
    return True


def _check_partition(G: Graph, partition: Sequence[Iterable[int]]) -> list[list[int]]:
    classes = [list(c) for c in partition]
    flat = [v for c in classes for v in c]
    if sorted(flat) != list(range(G.n)) or any(not c for c in classes):
        raise GraphError("colouring must partition the vertex set into non-empty classes")
    return classes


def first_bad_class(G: Graph, partition: Sequence[Iterable[int]]) -> int | None:
    """Index of the first class that is not nested independent, ``None`` if all are."""
    for i, cls in enumerate(_check_partition(G, partition)):
        order = nested_order(G, cls)
        ok = order is not None
        if ok != (order is not None and _exchange_condition(G, order)):
            raise AssertionError(f"nesting criteria disagree on class {cls}")
        if not ok:
            return i
    return None


def is_nested_coloring(G: Graph, partition: Sequence[Iterable[int]]) -> bool:
    return first_bad_class(G, partition) is None


def nested_chromatic_number(G: Graph) -> tuple[int, NestedColoring]:
    """Exact nested chromatic number with an optimal colouring.

    Pipeline: de-duplicate, order the non-isolated representatives by reverse
    neighbourhood containment, take a minimum chain cover, then expand each
    representative back into its duplicate class.  Isolated vertices fit in
    any class and are appended to the first one.
    """
    if G.n == 0:
        return 0, NestedColoring(())
    mapping = dedup(G)
    H = mapping.image
    active = [i for i in range(H.n) if H.adj[i]]
    isolated = [v for i in range(H.n) if not H.adj[i] for v in mapping.classes[i]]
    if not active:
        return 1, NestedColoring((tuple(isolated),))
    core = induced_subgraph(H, active)
    cover = min_chain_cover(weak_duplicate_poset(core))
    classes = [
        tuple(v for p in chain for v in mapping.classes[active[p]])
        for chain in cover.chains
    ]
    classes[0] += tuple(isolated)
    return len(classes), NestedColoring(tuple(classes))


def chi_nested(G: Graph) -> int:
    return nested_chromatic_number(G)[0]


DEFAULT_BRUTE_FORCE_CAP = 10


def brute_force_nested_chromatic(G: Graph, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> int:
    """Least number of classes over all set partitions with every class nested.

    Walks restricted growth strings (vertex ``v`` joins an existing class or
    opens the next one), keeping each partial class independent with pairwise
    comparable neighbourhoods, and never opening more classes than the best
    found so far.  Uses nothing beyond the definition.
    """
    n = G.n
    if n > cap:
        raise ValueError(f"brute force is capped at {cap} vertices (got {n})")
    if n == 0:
        return 0
    adj = G.adj
    best = n
    members: list[list[int]] = []

    def fits(v, cls):
        for u in cls:
            if adj[v] >> u & 1:
                return False
            if adj[v] & ~adj[u] and adj[u] & ~adj[v]:
                return False
        return True

    def grow(v):
        nonlocal best
        if v == n:
            best = min(best, len(members))
            return
        for cls in members:
            if fits(v, cls):
                cls.append(v)
                grow(v + 1)
                cls.pop()
        if len(members) + 1 < best:
            members.append([v])
            grow(v + 1)
            members.pop()

    grow(0)
    return best


def restricted_growth_strings(n: int):
    """All set partitions of ``range(n)`` as restricted growth strings."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(rgs)
            return
        for c in range(top + 2):
            rgs[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(1, 0)


def chromatic_number_exact(G: Graph) -> int:
    """Exact chromatic number by branch and bound.

    Vertices are coloured in order of decreasing degree, colours tried in
    increasing index; a greedy colouring gives the first upper bound and a
    greedy clique the lower bound.
    """
    n = G.n
    if n == 0:
        return 0
    adj = G.adj
    order = sorted(range(n), key=lambda v: (-popcount(adj[v]), v))

    colour = [-1] * n
    best = 0
    for v in order:
        used = {colour[u] for u in bits(adj[v]) if colour[u] >= 0}
        c = next(c for c in range(n) if c not in used)
        colour[v] = c
        best = max(best, c + 1)

    clique = 0
    size = 0
    for v in order:
        if adj[v] & clique == clique:
            clique |= 1 << v
            size += 1
    if size == best:
        return best

    # class_mask[c]: vertices currently holding colour c
    class_mask = [0] * n

    def search(i, used):
        nonlocal best
        if used >= best:
            return
        if i == n:
            best = used
            return
        v = order[i]
        for c in range(min(used + 1, best - 1)):
            if class_mask[c] & adj[v]:
                continue
            class_mask[c] |= 1 << v
            search(i + 1, max(used, c + 1))
            class_mask[c] &= ~(1 << v)
            if best == size:
                return

    search(0, 0)
    return best


def brute_force_chromatic_number(G: Graph) -> int:
    """Least proper colouring over all set partitions (tiny graphs only)."""
    if G.n == 0:
        return 0
    best = G.n
    for rgs in restricted_growth_strings(G.n):
        k = max(rgs) + 1
        if k < best and all(rgs[u] != rgs[v] for u, v in G.edges()):
            best = k
    return best


def is_colour_nested(G: Graph) -> bool:
    return chi_nested(G) == chromatic_number_exact(G)


def critical_vertices(G: Graph) -> frozenset[int]:
    """Vertices whose deletion lowers the chromatic number."""
    chi = chromatic_number_exact(G)
    return frozenset(v for v in range(G.n) if chromatic_number_exact(delete_vertex(G, v)) == chi - 1)


def is_vertex_critical(G: Graph) -> bool:
    return len(critical_vertices(G)) == G.n


def is_nested_critical(G: Graph) -> bool:
    k = chi_nested(G)
    return all(chi_nested(delete_vertex(G, v)) < k for v in range(G.n))
