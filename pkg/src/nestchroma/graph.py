"""Immutable simple graphs on dense vertex sets, stored as neighbour bitsets.

Vertex ``v`` of an ``n``-vertex graph is an integer in ``range(n)``; its open
neighbourhood is the Python int ``adj[v]`` whose bit ``u`` is set iff ``uv`` is
an edge.  Everything here returns new graphs; nothing mutates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class GraphError(ValueError):
    """Raised for malformed graph input (loops, out-of-range vertices)."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour >= n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels must name every vertex")

    def __eq__(self, other):
        # labels are presentation only
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self):
        return self.n

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            a[u, v] = a[v, u] = True
        return a


def build_graph(n: int, edges: Iterable[Sequence[int]] = (), labels=None) -> Graph:
    """Build a graph on ``range(n)`` from vertex pairs; repeated pairs collapse.

    >>> build_graph(5, [(0, 1), (0, 1), (1, 2)]).num_edges
    2
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    rows = [0] * n
    for e in edges:
        u, v = e
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), tuple(labels) if labels is not None else None)


def from_adjacency_matrix(a) -> Graph:
    a = np.asarray(a, dtype=bool)
    n = a.shape[0]
    return build_graph(n, zip(*np.nonzero(np.triu(a, 1))))


def _check_vertex(G: Graph, v: int):
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} outside 0..{G.n - 1}")


def open_neighbourhood(G: Graph, v: int) -> frozenset[int]:
    _check_vertex(G, v)
    return frozenset(bits(G.adj[v]))


def closed_neighbourhood(G: Graph, v: int) -> frozenset[int]:
    _check_vertex(G, v)
    return frozenset(bits(G.adj[v] | 1 << v))


def is_weak_duplicate(G: Graph, u: int, v: int) -> bool:
    """True iff ``N(u)`` is contained (not necessarily strictly) in ``N(v)``."""
    return G.adj[u] & ~G.adj[v] == 0


def are_duplicates(G: Graph, u: int, v: int) -> bool:
    return G.adj[u] == G.adj[v]


def is_duplicate_free(G: Graph) -> bool:
    return len(set(G.adj)) == G.n


@dataclass(frozen=True)
class DedupMapping:
    """Quotient of a graph by the equal-open-neighbourhood relation.

    ``classes[i]`` lists the original vertices collapsed into vertex ``i`` of
    ``image``; ``rep[i]`` is the smallest of them.
    """

    classes: tuple[tuple[int, ...], ...]
    image: Graph
    rep: tuple[int, ...]

    def class_of(self) -> list[int]:
        """Map each original vertex to its class index."""
        out = [0] * sum(len(c) for c in self.classes)
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out


def dedup(G: Graph) -> DedupMapping:
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(G.adj[v], []).append(v)
    # classes ordered by smallest member
    classes = sorted((tuple(c) for c in groups.values()), key=lambda c: c[0])
    rep = tuple(c[0] for c in classes)
    image = induced_subgraph(G, rep)
    return DedupMapping(tuple(classes), image, rep)


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj)), G.labels)


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """Subgraph induced on ``S``; new vertex ``i`` is the ``i``-th element of ``S``."""
    S = list(S)
    for v in S:
        _check_vertex(G, v)
    if len(set(S)) != len(S):
        raise GraphError("vertex subset has repeated entries")
    index = {v: i for i, v in enumerate(S)}
    rows = []
    for v in S:
        row = 0
        for u in bits(G.adj[v]):
            i = index.get(u)
            if i is not None:
                row |= 1 << i
        rows.append(row)
    labels = tuple(G.labels[v] for v in S) if G.labels is not None else None
    return Graph(len(S), tuple(rows), labels)


def delete_vertex(G: Graph, v: int) -> Graph:
    _check_vertex(G, v)
    return induced_subgraph(G, [u for u in range(G.n) if u != v])


def components(G: Graph) -> list[frozenset[int]]:
    seen = 0
    out = []
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(frozenset(bits(comp)))
    return out


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1


def isolated_vertices(G: Graph) -> list[int]:
    return [v for v in range(G.n) if G.adj[v] == 0]


def leaves(G: Graph) -> frozenset[int]:
    return frozenset(v for v in range(G.n) if popcount(G.adj[v]) == 1)


def leaf_classes(G: Graph) -> int:
    """Number of duplicate classes that contain a degree-1 vertex."""
    return len({G.adj[v] for v in leaves(G)})


def is_regular(G: Graph) -> int | None:
    """Common degree if every vertex has the same degree, else ``None``."""
    degs = set(G.degrees())
    if len(degs) > 1:
        return None
    return degs.pop() if degs else 0


def girth(G: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = float("inf")
    for s in range(G.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for v in queue:
            if 2 * dist[v] + 1 >= best:
                break
            for u in bits(G.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def is_bipartite(G: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A bipartition ``(A, B)`` if one exists, else ``None``."""
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(G.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    return (frozenset(v for v in range(G.n) if side[v] == 0),
            frozenset(v for v in range(G.n) if side[v] == 1))


def is_diamond_c4_free(G: Graph) -> bool:
    """True iff ``G`` has neither an induced diamond nor an induced 4-cycle.

    A nonadjacent pair with two common neighbours spans an induced C4 or a
    diamond; an adjacent pair with two nonadjacent common neighbours spans a
    diamond.  Together these two checks are exact.
    """
    for u, v in combinations(range(G.n), 2):
        common = G.adj[u] & G.adj[v]
        if popcount(common) < 2:
            continue
        if not G.has_edge(u, v):
            return False
        cs = list(bits(common))
        for a, b in combinations(cs, 2):
            if not G.has_edge(a, b):
                return False
    return True


def is_sperner(G: Graph) -> bool:
    """True iff no open neighbourhood contains another (pairwise, distinct vertices)."""
    adj = G.adj
    return not any(
        adj[u] & ~adj[v] == 0 or adj[v] & ~adj[u] == 0
        for u, v in combinations(range(G.n), 2)
    )


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``perm[v]`` playing the role of old vertex ``v``."""
    rows = [0] * G.n
    for v in range(G.n):
        row = 0
        for u in bits(G.adj[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return Graph(G.n, tuple(rows))
