"""Text formats: graph6 and a labelled edge list.

Edge-list format::

    # comment
    n 6
    1 2
    1 3
    5

A ``n <count>`` header, then one ``u v`` pair (or a lone ``v`` to declare a
vertex) per line.  Tokens are labels, numbered in first-seen order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, build_graph


class FormatError(ValueError):
    pass


def _size_bytes(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(G: Graph) -> str:
    """graph6 encoding: size header, then upper-triangle bits column by column."""
    out = [_size_bytes(G.n)]
    acc = nbits = 0
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise FormatError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"graph6 byte {ch!r} at position {pos} outside 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise FormatError("truncated graph6 size header")
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise FormatError("truncated graph6 size header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6} for n={n}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need % 6 and body[-1] & ((1 << (6 - need % 6)) - 1):
        raise FormatError("nonzero padding bits in graph6 string")
    return Graph(n, tuple(rows))


@dataclass(frozen=True)
class GraphDocument:
    format: str
    graph: Graph
    labels: tuple[str, ...] | None


def parse_edge_list(text: str) -> GraphDocument:
    n = None
    index: dict[str, int] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n" or not tokens[1].isdigit():
                raise FormatError(f"line {lineno}: expected header 'n <count>'")
            n = int(tokens[1])
            continue
        if len(tokens) not in (1, 2):
            raise FormatError(f"line {lineno}: expected 'u v' or a single vertex, got {line!r}")
        for t in tokens:
            if t not in index:
                if len(index) == n:
                    raise FormatError(f"line {lineno}: more than {n} distinct vertices")
                index[t] = len(index)
        if len(tokens) == 2:
            u, v = (index[t] for t in tokens)
            if u == v:
                raise FormatError(f"line {lineno}: loop at vertex {tokens[0]}")
            edges.append((u, v))
    if n is None:
        raise FormatError("missing 'n <count>' header")
    labels = list(index)
    taken = set(labels)
    fresh = (str(i) for i in range(10 * n + 10) if str(i) not in taken)
    while len(labels) < n:
        labels.append(next(fresh))
    try:
        G = build_graph(n, edges, labels)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc
    return GraphDocument("edge-list", G, tuple(labels))


def write_edge_list(G: Graph) -> str:
    seen: dict[int, None] = {}
    for e in G.edges():
        seen.update(dict.fromkeys(e))
    order = list(seen) + [v for v in range(G.n) if v not in seen]
    lines = [f"n {G.n}"]
    # parsers number vertices in first-seen order, so pin it when edges would permute it
    if order != list(range(G.n)):
        lines += [G.label(v) for v in range(G.n)]
    lines += [f"{G.label(u)} {G.label(v)}" for u, v in G.edges()]
    if order == list(range(G.n)):
        lines += [G.label(v) for v in range(G.n) if v not in seen]
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> list[GraphDocument]:
    """Auto-detect: an ``n`` header means one edge list, otherwise graph6 lines."""
    body = [ln.strip() for ln in text.splitlines()]
    first = next((ln for ln in body if ln and not ln.startswith("#")), None)
    if first is None:
        raise FormatError("no graph in input")
    if first.split()[0] == "n":
        return [parse_edge_list(text)]
    return [GraphDocument("graph6", parse_graph6(ln), None)
            for ln in body if ln and not ln.startswith("#")]
