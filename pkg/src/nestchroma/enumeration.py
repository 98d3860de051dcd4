"""Isomorph-free generation of small graphs and the exhaustive experiments on them.

Graphs on ``n`` vertices are grown from the representatives on ``n - 1``
vertices by adding a vertex with every possible neighbourhood (one per orbit
of the parent's known automorphisms) and keeping one child per canonical
code.  Connectedness and bipartiteness are inherited this way: every
connected graph has a vertex whose deletion leaves it connected, and every
induced subgraph of a bipartite graph is bipartite, so filtered runs only
extend filtered parents.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Iterator, Sequence

from .canon import canonical_labelling
from .constructions import complete, cycle
from .graph import Graph, build_graph, complement, is_bipartite, is_connected, is_duplicate_free
from .io import parse_graph6, write_graph6
from .nested_coloring import chi_nested, chromatic_number_exact
from .poset import Poset, is_isomorphic, weak_duplicate_poset

MAX_ORDER = 9


@dataclass(frozen=True)
class GraphClassFilter:
    connected_only: bool = False
    bipartite_only: bool = False
    min_n: int = 1
    max_n: int = MAX_ORDER

    def __post_init__(self):
        if not 0 <= self.min_n <= self.max_n:
            raise ValueError(f"inconsistent vertex bounds {self.min_n}..{self.max_n}")

    def accepts(self, G: Graph) -> bool:
        return (self.min_n <= G.n <= self.max_n
                and (not self.connected_only or is_connected(G))
                and (not self.bipartite_only or is_bipartite(G) is not None))


def _subset_orbit_reps(m: int, gens: Sequence[Sequence[int]]) -> list[int]:
    """One bitmask per orbit of subsets of ``range(m)`` under ``gens``."""
    seen = bytearray(1 << m)
    reps = []
    for S in range(1 << m):
        if seen[S]:
            continue
        reps.append(S)
        seen[S] = 1
        stack = [S]
        while stack:
            T = stack.pop()
            for g in gens:
                img = 0
                x = T
                while x:
                    low = x & -x
                    img |= 1 << g[low.bit_length() - 1]
                    x ^= low
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)
    return reps


@lru_cache(maxsize=None)
def _level(n: int, connected: bool, bipartite: bool) -> tuple[tuple[Graph, tuple], ...]:
    """Canonical representatives on ``n`` vertices with their automorphism generators."""
    if n == 0:
        return ((Graph(0, ()), ()),)
    if n == 1:
        return ((Graph(1, (0,)), ()),)
    found: dict[int, tuple[Graph, tuple]] = {}
    for parent, gens in _level(n - 1, connected, bipartite):
        m = parent.n
        for S in _subset_orbit_reps(m, gens):
            if connected and not S:
                continue
            rows = tuple(row | (S >> v & 1) << m for v, row in enumerate(parent.adj)) + (S,)
            child = Graph(n, rows)
            if bipartite and is_bipartite(child) is None:
                continue
            code, perm, child_gens = canonical_labelling(child)
            if code in found:
                continue
            inv = [0] * n
            for i, v in enumerate(perm):
                inv[v] = i
            canon_rows = [0] * n
            for v in range(n):
                row = 0
                x = rows[v]
                while x:
                    low = x & -x
                    row |= 1 << inv[low.bit_length() - 1]
                    x ^= low
                canon_rows[inv[v]] = row
            conj = tuple(tuple(inv[g[perm[i]]] for i in range(n)) for g in child_gens)
            found[code] = (Graph(n, tuple(canon_rows)), conj)
    return tuple(found[c] for c in sorted(found))


def generate_graphs(n: int, filt: GraphClassFilter | None = None) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices, in canonical-code order."""
    if not 0 <= n <= MAX_ORDER:
        raise ValueError(f"exhaustive generation is capped at n <= {MAX_ORDER} (got {n})")
    filt = filt or GraphClassFilter()
    if not filt.min_n <= n <= filt.max_n:
        return
    for G, _ in _level(n, filt.connected_only, filt.bipartite_only):
        yield G


def generate_range(filt: GraphClassFilter) -> Iterator[Graph]:
    for n in range(filt.min_n, filt.max_n + 1):
        yield from generate_graphs(n, filt)


def graphs_from_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Stream graphs from external graph6 lines (for orders beyond the cap)."""
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("NESTCHROMA_THREADS", "1")))
    except ValueError:
        return 1


def ordered_map(func: Callable, items: Sequence, workers: int | None = None) -> list:
    """``[func(x) for x in items]``, fanned out over processes when ``workers > 1``."""
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) < 64:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (8 * workers))))


def chi_pair(G: Graph) -> tuple[int, int]:
    return chromatic_number_exact(G), chi_nested(G)


@dataclass(frozen=True, order=True)
class TripleRecord:
    n: int
    chi: int
    chi_n: int
    witness: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 1 <= self.chi <= self.chi_n <= self.n:
            raise ValueError(f"impossible triple ({self.n}, {self.chi}, {self.chi_n})")


def triple_excluded(n: int, c: int, s: int) -> bool:
    """Whether no graph on ``n`` vertices has chromatic number ``c`` and nested chromatic number ``s``."""
    return ((c == 1 and s > 1)
            or (c == 2 and s == 3)
            or (c == 2 and (n, s) in {(4, 4), (5, 5), (6, 5), (7, 7)})
            or (c == n - 1 and s == n))


def expected_pairs(n: int) -> set[tuple[int, int]]:
    return {(c, s) for c in range(1, n + 1) for s in range(c, n + 1) if not triple_excluded(n, c, s)}


@dataclass
class TripleReport:
    n: int
    records: list[TripleRecord]
    gaps: list[tuple[int, int]]
    connected_witness: dict[tuple[int, int], bool]

    @property
    def pairs(self) -> set[tuple[int, int]]:
        return {(r.chi, r.chi_n) for r in self.records}


def classify_triples(n: int, graphs: Iterable[Graph] | None = None,
                     workers: int | None = None) -> TripleReport:
    """Realisable (chi, chi_N) pairs on ``n`` vertices, one witness each.

    The witness is the first connected graph realising the pair when one
    exists, else the first graph.  ``gaps`` lists the pairs
    ``1 <= c <= s <= n`` with no witness.
    """
    graphs = list(graphs) if graphs is not None else list(generate_graphs(n))
    values = ordered_map(chi_pair, graphs, workers)
    witness: dict[tuple[int, int], Graph] = {}
    connected: dict[tuple[int, int], bool] = {}
    for G, pair in zip(graphs, values):
        if connected.get(pair):
            continue
        conn = is_connected(G)
        if pair not in witness or conn:
            witness[pair] = G
            connected[pair] = conn
    records = sorted(TripleRecord(n, c, s, write_graph6(witness[(c, s)])) for c, s in witness)
    gaps = sorted(set((c, s) for c in range(1, n + 1) for s in range(c, n + 1)) - set(witness))
    return TripleReport(n, records, gaps, connected)


def poset_realizability(P: Poset, n: int) -> Graph | None:
    """A duplicate-free graph on at most ``n`` vertices whose weak-duplicate poset is ``P``.

    The poset of a graph lives on its vertex set, so only graphs of order
    ``P.m`` qualify.  ``None`` means the exhaustive search found nothing.
    """
    if P.m > n or P.m > MAX_ORDER:
        return None
    for G in generate_graphs(P.m):
        if is_duplicate_free(G) and is_isomorphic(weak_duplicate_poset(G), P):
            return G
    return None


@dataclass
class ComplementScan:
    """Per-order minimum of ``chi_N(G) + chi_N(co-G) - n`` (a conjecture, not a theorem)."""

    min_slack: dict[int, int]
    witness: dict[int, str]
    counterexamples: list[str]


def complement_slack(G: Graph) -> int:
    return chi_nested(G) + chi_nested(complement(G)) - G.n


def complement_conjecture_scan(max_n: int, min_n: int = 1) -> ComplementScan:
    min_slack, witness, bad = {}, {}, []
    for n in range(min_n, max_n + 1):
        for G in generate_graphs(n):
            s = complement_slack(G)
            if n not in min_slack or s < min_slack[n]:
                min_slack[n], witness[n] = s, write_graph6(G)
            if s < 0:
                bad.append(write_graph6(G))
    return ComplementScan(min_slack, witness, bad)


def conjugate_sequence(a: Sequence[int]) -> tuple[int, ...]:
    """``b_i = #{j : a_j >= i}``; swaps the roles of the two colour classes."""
    return tuple(sum(1 for x in a if x >= i) for i in range(1, max(a) + 1))


def colour_nested_bipartite_sequences(n: int) -> set[tuple[tuple[int, ...], int]]:
    """Connected ``(a, s)`` with ``r + s = n``, one per unordered side swap."""
    out = set()
    for r in range(1, n):
        s = n - r
        for tail in combinations_with_replacement(range(s, 0, -1), r - 1):
            a = (s,) + tail
            b = conjugate_sequence(a)
            out.add(min((a, s), (b, r)))
    return out


def count_by_sequences(n: int) -> int:
    return len(colour_nested_bipartite_sequences(n))


def count_by_enumeration(n: int) -> int:
    filt = GraphClassFilter(connected_only=True, bipartite_only=True)
    return sum(1 for G in generate_graphs(n, filt) if chi_nested(G) == 2)


def count_colour_nested_bipartite(n: int) -> int:
    """Connected colour-nested bipartite graphs on ``n`` vertices, counted both ways."""
    if n < 2:
        raise ValueError("need n >= 2")
    by_seq = count_by_sequences(n)
    if n <= MAX_ORDER:
        by_enum = count_by_enumeration(n)
        if by_enum != by_seq:
            raise RuntimeError(f"counting routes disagree at n={n}: {by_seq} vs {by_enum}")
    return by_seq


def duplicate_free_colour_nested_bipartite(n: int, connected_only: bool = False) -> list[Graph]:
    """Duplicate-free graphs on ``n`` vertices with ``chi = chi_N = 2``.

    Connected ones exist only for even ``n``; odd orders need an isolated vertex.
    """
    filt = GraphClassFilter(connected_only=connected_only, bipartite_only=True)
    return [G for G in generate_graphs(n, filt) if is_duplicate_free(G) and chi_nested(G) == 2]


def planar_witness(n: int, k: int) -> Graph:
    """Connected planar graph on ``n`` vertices with nested chromatic number ``k``.

    ``K_k`` for ``k <= 4``, ``C_k`` otherwise, with ``n - k`` leaves hung on
    vertex ``k - 2`` (a neighbour of vertex ``k - 1``).
    """
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    base = complete(k) if k <= 4 else cycle(k)
    return build_graph(n, base.edges() + [(k - 2, i) for i in range(k, n)])


def planar_sweep(n: int) -> list[tuple[int, Graph, int]]:
    """``(k, witness, solver value)`` for each ``2 <= k <= n``."""
    out = []
    for k in range(2, n + 1):
        G = planar_witness(n, k)
        out.append((k, G, chi_nested(G)))
    return out
