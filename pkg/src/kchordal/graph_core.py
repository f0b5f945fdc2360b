"""Simple undirected graphs over dense 0-based vertices with bitset adjacency.

A vertex set is represented as a Python ``int`` used as a bitset: vertex ``v``
is a member when bit ``v`` is set.  :func:`vset` and :func:`members` convert
between iterables and bitsets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VertexSet = int

INFINITY = math.inf

GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed.

    ``offset`` is the 0-based byte offset (graph6) and ``line`` the 1-based
    line number (edge list), whichever applies.
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = []
        if offset is not None:
            where.append(f"byte {offset}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in increasing order."""
    return list(iter_bits(mask))


def iter_bits(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


def _as_mask(s: VertexSet | Iterable[int]) -> VertexSet:
    return s if isinstance(s, int) else vset(s)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the bitset of neighbours of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {{{v},{u}}} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def is_complete(self) -> bool:
        full = self.vertices
        return all(nb | (1 << v) == full for v, nb in enumerate(self.adj))

    def is_clique(self, s: VertexSet) -> bool:
        return all(self.adj[v] | (1 << v) | ~s == -1 for v in iter_bits(s))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------- neighbourhoods


def open_neighbourhood(g: Graph, a: VertexSet | Iterable[int]) -> VertexSet:
    """N_G(A): vertices outside ``a`` adjacent to some member of ``a``."""
    a = _as_mask(a)
    if a & ~g.vertices:
        raise ValueError("vertex set has members outside the graph")
    nb = 0
    for v in iter_bits(a):
        nb |= g.adj[v]
    return nb & ~a


def closed_neighbourhood(g: Graph, a: VertexSet | Iterable[int]) -> VertexSet:
    a = _as_mask(a)
    return a | open_neighbourhood(g, a)


# ---------------------------------------------------------------- traversal


def reach(adj: Sequence[int], start: VertexSet, within: VertexSet, depth: int | None = None) -> VertexSet:
    """Vertices of ``within`` reachable from ``start`` in at most ``depth`` steps."""
    seen = frontier = start & within
    steps = 0
    while frontier and (depth is None or steps < depth):
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
        steps += 1
    return seen


def components(adj: Sequence[int], within: VertexSet) -> list[VertexSet]:
    """Connected components of the subgraph induced on ``within``, ordered by least vertex."""
    out = []
    rest = within
    while rest:
        comp = reach(adj, rest & -rest, within)
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(g: Graph) -> list[VertexSet]:
    return components(g.adj, g.vertices)


def is_connected(g: Graph) -> bool:
    return g.n == 0 or reach(g.adj, 1, g.vertices) == g.vertices


def distance(g: Graph, u: int, v: int) -> int | float:
    """Length of a shortest u-v path, or ``INFINITY`` when none exists."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex out of range for n={g.n}")
    return _bfs_distance(g.adj, u, v, g.vertices)


def _bfs_distance(adj: Sequence[int], u: int, v: int, within: VertexSet) -> int | float:
    target = 1 << v
    seen = frontier = 1 << u
    d = 0
    while frontier:
        if frontier & target:
            return d
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= adj[w]
        frontier = nxt & within & ~seen
        seen |= frontier
        d += 1
    return INFINITY


# ---------------------------------------------------------------- derived graphs


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """G[S] relabelled to 0..|S|-1, plus ``labels`` with ``labels[new] = old``."""
    s = _as_mask(s)
    if s & ~g.vertices:
        raise ValueError("vertex set has members outside the graph")
    labels = tuple(iter_bits(s))
    index = {old: new for new, old in enumerate(labels)}
    adj = []
    for old in labels:
        row = 0
        for w in iter_bits(g.adj[old] & s):
            row |= 1 << index[w]
        adj.append(row)
    return Graph(len(labels), tuple(adj)), labels


def graph_power(g: Graph, k: int) -> Graph:
    """G^k: same vertices, u ~ v iff 0 < d_G(u, v) <= k."""
    if k < 1:
        raise ValueError(f"graph power needs k >= 1, got {k}")
    full = g.vertices
    return Graph(g.n, tuple(reach(g.adj, 1 << v, full, k) & ~(1 << v) for v in range(g.n)))


def minus_vertex_power(g: Graph, v: int, k: int) -> tuple[Graph, tuple[int, ...]]:
    """(G - v)^k with the relabelling of :func:`induced_subgraph`."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    h, labels = induced_subgraph(g, g.vertices & ~(1 << v))
    return graph_power(h, k), labels


# ---------------------------------------------------------------- text formats


def _graph6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def encode_graph6(g: Graph) -> str:
    """Header-less graph6 line (no trailing newline)."""
    out = bytearray(_graph6_size(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    line = text.strip("\r\n")
    base = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    data = line.encode("latin-1", errors="replace")
    if not data:
        raise GraphFormatError("graph6: missing length prefix", offset=base)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise GraphFormatError(f"graph6: character {c!r} outside [63, 126]", offset=base + i)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("graph6: truncated 8-byte length prefix", offset=base + len(data))
        n, pos = 0, 8
        for c in data[2:8]:
            n = n << 6 | (c - 63)
    else:
        if len(data) < 4:
            raise GraphFormatError("graph6: truncated 4-byte length prefix", offset=base + len(data))
        n, pos = 0, 4
        for c in data[1:4]:
            n = n << 6 | (c - 63)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise GraphFormatError(f"graph6: expected {need} data bytes for n={n}, got {len(body)}",
                               offset=base + len(data))
    if len(body) > need:
        raise GraphFormatError("graph6: trailing garbage", offset=base + pos + need)

    adj = [0] * n
    t = 0
    for j in range(1, n):
        for i in range(j):
            if (body[t // 6] - 63) >> (5 - t % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            t += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError("graph6: non-zero padding bits", offset=base + pos + need - 1)
    return Graph(n, tuple(adj))


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line, then one ``u v`` edge per line.

    Blank lines and ``#`` comments are ignored; duplicate edges collapse.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise GraphFormatError(f"edge list: non-integer token in {raw!r}", line=lineno) from None
        if n is None:
            if len(values) != 1 or values[0] < 0:
                raise GraphFormatError("edge list: first line must be a vertex count", line=lineno)
            n = values[0]
            continue
        if len(values) != 2:
            raise GraphFormatError(f"edge list: expected 'u v', got {raw!r}", line=lineno)
        u, v = values
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge list: endpoint out of range [0, {n})", line=lineno)
        if u == v:
            raise GraphFormatError(f"edge list: self-loop at vertex {u}", line=lineno)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("edge list: missing vertex count", line=1)
    return Graph.from_edges(n, edges)


def encode_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"
