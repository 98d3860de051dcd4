"""Finite posets, the weak-duplicate order of a graph, and Dilworth machinery.

Width is computed through the split bipartite graph: element ``p`` gets an
out-copy on the left and an in-copy on the right, with an edge ``p -> q``
whenever ``p < q``.  A maximum matching (Hopcroft-Karp) glues elements into
chains, so ``m - |matching|`` chains cover the poset, and the Koenig vertex
cover of the same matching yields an antichain of that size.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, GraphError


class PosetError(ValueError):
    pass


class DuplicateVerticesError(GraphError):
    """The weak-duplicate order is only antisymmetric on duplicate-free graphs."""

    def __init__(self, u: int, v: int):
        super().__init__(f"vertices {u} and {v} are duplicates; dedup the graph first")
        self.pair = (u, v)


@dataclass(frozen=True, eq=False)
class Poset:
    """Strict partial order on ``range(m)``: ``lt[p, q]`` iff ``p < q``."""

    lt: np.ndarray
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        lt = np.array(self.lt, dtype=bool)
        if lt.ndim != 2 or lt.shape[0] != lt.shape[1]:
            raise PosetError("order matrix must be square")
        if lt.diagonal().any():
            raise PosetError("order must be irreflexive")
        if (lt & lt.T).any():
            raise PosetError("order must be antisymmetric")
        if lt.size and ((lt.astype(np.int32) @ lt.astype(np.int32) > 0) & ~lt).any():
            raise PosetError("order must be transitive")
        lt.flags.writeable = False
        object.__setattr__(self, "lt", lt)

    @property
    def m(self) -> int:
        return self.lt.shape[0]

    def __len__(self):
        return self.m

    def __eq__(self, other):
        return isinstance(other, Poset) and np.array_equal(self.lt, other.lt)

    def __repr__(self):
        return f"Poset(m={self.m}, covers={self.cover_relations()})"

    def less(self, p: int, q: int) -> bool:
        return bool(self.lt[p, q])

    def comparable(self, p: int, q: int) -> bool:
        return p == q or bool(self.lt[p, q] or self.lt[q, p])

    def dual(self) -> Poset:
        return Poset(self.lt.T.copy(), self.names)

    def cover_relations(self) -> list[tuple[int, int]]:
        """Pairs ``p < q`` with nothing strictly between them (the Hasse diagram)."""
        lt = self.lt.astype(np.int32)
        covers = self.lt & ~((lt @ lt) > 0)
        return [(int(p), int(q)) for p, q in zip(*np.nonzero(covers))]

    def is_antichain(self, elements: Iterable[int]) -> bool:
        els = list(elements)
        return not self.lt[np.ix_(els, els)].any()

    def is_chain(self, elements: Sequence[int]) -> bool:
        """True iff ``elements`` is listed in strictly increasing order."""
        return all(self.lt[a, b] for a, b in zip(elements, elements[1:]))


def transitive_closure(rel) -> np.ndarray:
    """Transitive closure of a boolean relation matrix (Warshall)."""
    r = np.array(rel, dtype=bool)
    for k in range(r.shape[0]):
        r |= np.outer(r[:, k], r[k, :])
    return r


def poset_from_relations(m: int, relations: Iterable[tuple[int, int]], names=None) -> Poset:
    """Poset generated by the given ``p < q`` pairs (closed transitively)."""
    rel = np.zeros((m, m), dtype=bool)
    for p, q in relations:
        if not (0 <= p < m and 0 <= q < m):
            raise PosetError(f"relation ({p}, {q}) outside 0..{m - 1}")
        rel[p, q] = True
    return Poset(transitive_closure(rel), names)


def antichain_poset(m: int) -> Poset:
    return Poset(np.zeros((m, m), dtype=bool))


def chain_poset(m: int) -> Poset:
    return Poset(np.triu(np.ones((m, m), dtype=bool), 1))


def containment_matrix(G: Graph) -> np.ndarray:
    """``sub[u, v]`` iff ``N(u)`` is a subset of ``N(v)`` (non-strict).

    One dense product: ``|N(u) \\ N(v)|`` for all pairs at once.
    """
    a = G.adjacency_matrix().astype(np.float32)
    missing = a @ (1.0 - a).T
    return missing == 0


def weak_duplicate_poset(G: Graph) -> Poset:
    """Order ``p < q`` iff ``N(q)`` is a proper subset of ``N(p)``.

    Requires a duplicate-free graph; raises :class:`DuplicateVerticesError`
    naming the first duplicate pair otherwise.
    """
    seen: dict[int, int] = {}
    for v, row in enumerate(G.adj):
        if row in seen:
            raise DuplicateVerticesError(seen[row], v)
        seen[row] = v
    sub = containment_matrix(G)
    np.fill_diagonal(sub, False)
    return Poset(sub.T.copy(), G.labels)


@dataclass(frozen=True)
class Matching:
    """A matching of the split graph, as ``(out_copy, in_copy)`` pairs."""

    pairs: frozenset[tuple[int, int]]
    m: int
    mate_out: tuple[int, ...] = field(repr=False, default=())

    def __len__(self):
        return len(self.pairs)


def hopcroft_karp(adjacency: Sequence[Sequence[int]], n_right: int) -> list[int]:
    """Maximum bipartite matching by shortest augmenting path phases.

    ``adjacency[u]`` lists the right vertices of left vertex ``u`` in the order
    they are tried.  Returns ``mate[u]`` (``-1`` when ``u`` is unmatched).
    """
    n_left = len(adjacency)
    mate_l = [-1] * n_left
    mate_r = [-1] * n_right
    inf = n_left + 1

    while True:
        # BFS layers from free left vertices
        dist = [inf] * n_left
        queue = deque()
        for u in range(n_left):
            if mate_l[u] < 0:
                dist[u] = 0
                queue.append(u)
        limit = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= limit:
                continue
            for w in adjacency[u]:
                x = mate_r[w]
                if x < 0:
                    limit = min(limit, dist[u] + 1)
                elif dist[x] == inf:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if limit == inf:
            return mate_l

        # vertex-disjoint shortest augmenting paths, iterative DFS
        it = [0] * n_left
        for root in range(n_left):
            if mate_l[root] >= 0:
                continue
            stack = [root]
            while stack:
                u = stack[-1]
                advanced = False
                while it[u] < len(adjacency[u]):
                    w = adjacency[u][it[u]]
                    it[u] += 1
                    x = mate_r[w]
                    if x < 0:
                        if dist[u] + 1 != limit:
                            continue
                        # augment along the stack
                        for depth in range(len(stack) - 1, -1, -1):
                            a = stack[depth]
                            nxt = mate_l[a]
                            mate_l[a] = w
                            mate_r[w] = a
                            w = nxt
                        stack = []
                        advanced = True
                        break
                    if dist[x] == dist[u] + 1:
                        stack.append(x)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = inf
                    stack.pop()


def split_graph(P: Poset) -> list[list[int]]:
    """Left vertex ``p`` (out-copy) -> in-copies ``q`` with ``p < q``, index order."""
    return [np.flatnonzero(P.lt[p]).tolist() for p in range(P.m)]


def max_matching(P: Poset) -> Matching:
    mate = hopcroft_karp(split_graph(P), P.m)
    pairs = frozenset((p, q) for p, q in enumerate(mate) if q >= 0)
    return Matching(pairs, P.m, tuple(mate))


@dataclass(frozen=True)
class ChainCover:
    chains: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.chains)


def chains_from_matching(M: Matching) -> ChainCover:
    succ = dict(M.pairs)
    has_pred = {q for _, q in M.pairs}
    chains = []
    for start in range(M.m):
        if start in has_pred:
            continue
        chain = [start]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        chains.append(tuple(chain))
    return ChainCover(tuple(chains))


def min_chain_cover(P: Poset) -> ChainCover:
    return chains_from_matching(max_matching(P))


def koenig_antichain(P: Poset, M: Matching) -> list[int]:
    """Maximum antichain from the Koenig cover of a maximum matching.

    Alternating search from free out-copies marks ``Z``; the cover is
    (out-copies outside ``Z``) + (in-copies inside ``Z``).  Element ``p`` is in
    the antichain iff neither of its copies is in the cover.
    """
    adjacency = split_graph(P)
    mate_in = {q: p for p, q in M.pairs}
    matched_out = {p for p, _ in M.pairs}
    z_out = set(p for p in range(P.m) if p not in matched_out)
    z_in: set[int] = set()
    queue = deque(sorted(z_out))
    while queue:
        p = queue.popleft()
        for q in adjacency[p]:
            if q in z_in:
                continue
            z_in.add(q)
            r = mate_in.get(q)
            if r is not None and r not in z_out:
                z_out.add(r)
                queue.append(r)
    return sorted(p for p in z_out if p not in z_in)


def width(P: Poset) -> tuple[int, list[int]]:
    """Maximum antichain size together with a witness antichain."""
    M = max_matching(P)
    antichain = koenig_antichain(P, M)
    return P.m - len(M), antichain


def height(P: Poset) -> int:
    """Length (in edges) of a longest chain; 0 for antichains and the empty poset."""
    if P.m == 0:
        return 0
    # number of predecessors strictly increases along the order
    order = np.argsort(P.lt.sum(axis=0), kind="stable")
    longest = np.zeros(P.m, dtype=np.int64)
    for q in order:
        below = np.flatnonzero(P.lt[:, q])
        if below.size:
            longest[q] = longest[below].max() + 1
    return int(longest.max())


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    """Order isomorphism by backtracking on (up-degree, down-degree) classes."""
    if P.m != Q.m or P.lt.sum() != Q.lt.sum():
        return False
    sig_p = list(zip(P.lt.sum(1).tolist(), P.lt.sum(0).tolist()))
    sig_q = list(zip(Q.lt.sum(1).tolist(), Q.lt.sum(0).tolist()))
    if sorted(sig_p) != sorted(sig_q):
        return False
    m = P.m
    image = [-1] * m
    used = [False] * m

    def extend(p):
        if p == m:
            return True
        for q in range(m):
            if used[q] or sig_q[q] != sig_p[p]:
                continue
            if any(P.lt[p, r] != Q.lt[q, image[r]] or P.lt[r, p] != Q.lt[image[r], q]
                   for r in range(p)):
                continue
            image[p], used[q] = q, True
            if extend(p + 1):
                return True
            image[p], used[q] = -1, False
        return False

    return extend(0)


def brute_force_width(P: Poset) -> int:
    """Largest antichain by subset enumeration; only for tiny posets."""
    best = 0
    for mask in range(1 << P.m):
        els = [p for p in range(P.m) if mask >> p & 1]
        if len(els) > best and P.is_antichain(els):
            best = len(els)
    return best


def brute_force_max_matching_size(P: Poset) -> int:
    """Maximum matching of the split graph by exhaustive search (tiny posets)."""
    adjacency = split_graph(P)

    def search(p, used):
        if p == P.m:
            return 0
        best = search(p + 1, used)
        for q in adjacency[p]:
            if not used >> q & 1:
                best = max(best, 1 + search(p + 1, used | 1 << q))
        return best

    return search(0, 0)


def hasse_dot(P: Poset, name: str = "P") -> str:
    """Graphviz DOT for the Hasse diagram, smaller elements drawn lower."""
    names = P.names or tuple(str(p) for p in range(P.m))
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines += [f'  "{names[p]}";' for p in range(P.m)]
    lines += [f'  "{names[p]}" -> "{names[q]}";' for p, q in P.cover_relations()]
    lines.append("}")
    return "\n".join(lines)


__all__ = [
    "Poset", "PosetError", "DuplicateVerticesError", "Matching", "ChainCover",
    "transitive_closure", "poset_from_relations", "antichain_poset", "chain_poset",
    "containment_matrix", "weak_duplicate_poset", "hopcroft_karp", "split_graph",
    "max_matching", "chains_from_matching", "min_chain_cover", "koenig_antichain",
    "width", "height", "is_isomorphic", "brute_force_width",
    "brute_force_max_matching_size", "hasse_dot",
]
