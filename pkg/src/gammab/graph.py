"""Small simple graphs stored as bitset adjacency rows.

Vertices are ``0..n-1`` and ``adj[v]`` is an int whose bit ``u`` is set iff
``u`` and ``v`` are adjacent. Graphs are immutable values; equality is
labeled-graph equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Invalid graph construction or query."""


class ParseError(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate and reversed pairs collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if n > MAX_VERTICES:
        raise GraphError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex capacity")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees(), reverse=True))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabeled in ascending vertex order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v]):
            i = index.get(u)
            if i is not None:
                row |= 1 << i
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def induced_mask(g: Graph, mask: int) -> Graph:
    return induced_subgraph(g, iter_bits(mask))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.vertex_mask


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges() == g.n - 1 and is_connected(g)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return build_graph(g.n + h.n, g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()])


# graph6 ---------------------------------------------------------------------

def _g6_size(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def _to_graph6(g: Graph) -> str:
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        body.append(chr(63 + val))
    return _g6_size(g.n) + "".join(body)


def _from_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
    data = s[base:]
    if not data:
        raise ParseError("empty graph6 string", base)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", base + i)

    def chunk(start: int, count: int) -> int:
        if len(data) < start + count:
            raise ParseError("truncated graph6 size field", base + len(data))
        val = 0
        for ch in data[start:start + count]:
            val = val << 6 | (ord(ch) - 63)
        return val

    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    elif len(data) > 1 and data[1] == "~":
        n, pos = chunk(2, 6), 8
    else:
        n, pos = chunk(1, 3), 4
    if n > MAX_VERTICES:
        raise ParseError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex capacity", base)

    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    have = len(data) - pos
    if have < need:
        raise ParseError(f"truncated graph6 bit stream: expected {need} bytes, found {have}", base + len(data))
    if have > need:
        raise ParseError("trailing bytes after graph6 bit stream", base + pos + need)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(data[pos + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# edge list ------------------------------------------------------------------

def _to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in sorted(g.edges())]
    return "\n".join(lines) + "\n"


def _from_edge_list(text: str) -> Graph:
    n = None
    edges = []
    offset = 0
    for line in text.splitlines(keepends=True):
        start, offset = offset, offset + len(line.encode())
        fields = line.split()
        if not fields:
            continue
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"non-integer token in line {line.strip()!r}", start) from None
        if n is None:
            if len(values) != 1 or values[0] < 0:
                raise ParseError("first line must hold a single vertex count", start)
            n = values[0]
            continue
        if len(values) != 2:
            raise ParseError(f"expected 'u v', got {line.strip()!r}", start)
        u, v = values
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"invalid edge ({u}, {v}) for n={n}", start)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing vertex count", 0)
    return build_graph(n, edges)


FORMATS = ("graph6", "edge-list")


def parse_graph(text: str, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        return _from_graph6(text)
    if fmt == "edge-list":
        return _from_edge_list(text)
    raise GraphError(f"unknown graph format {fmt!r}; expected one of {FORMATS}")


def emit_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return _to_graph6(g)
    if fmt == "edge-list":
        return _to_edge_list(g)
    raise GraphError(f"unknown graph format {fmt!r}; expected one of {FORMATS}")
