"""Immutable simple graphs on at most 64 vertices with bitset adjacency rows."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

N_MAX = 64

GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed graph6 input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
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
    m: int = field(default=-1, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= N_MAX:
            raise ValueError(f"vertex count {self.n} outside 0..{N_MAX}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        if self.m < 0:
            object.__setattr__(self, "m", sum(r.bit_count() for r in self.adj) // 2)

    # -- queries -------------------------------------------------------------

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def common_neighbors(self, u: int, v: int) -> int:
        return (self.adj[u] & self.adj[v]).bit_count()

    # -- derived graphs ------------------------------------------------------

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return build(self.n, self.edges() + list(pairs))

    def remove_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in pairs:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def delete_vertices(self, removed: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        keep = self.all_mask & ~mask_of(removed)
        return induced_subgraph(self, keep)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        adj = [0] * self.n
        for v in range(self.n):
            pv = perm[v]
            for w in bits(self.adj[v]):
                adj[pv] |= 1 << perm[w]
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= N_MAX:
        raise ValueError(f"vertex count {n} outside 0..{N_MAX}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, outer + spokes + inner)


def induced_subgraph(g: Graph, subset: int) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by the bitset ``subset``, compacted to 0..|S|-1.

    Returns the graph and the old->new relabeling map.
    """
    subset &= g.all_mask
    order = list(bits(subset))
    index = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        row = 0
        for w in bits(g.adj[v] & subset):
            row |= 1 << index[w]
        adj.append(row)
    return Graph(len(order), tuple(adj)), index


@dataclass(frozen=True)
class Bipartition:
    X: int
    Y: int

    def sides(self) -> tuple[list[int], list[int]]:
        return list(bits(self.X)), list(bits(self.Y))

    def is_valid_for(self, g: Graph) -> bool:
        if self.X & self.Y or (self.X | self.Y) != g.all_mask:
            return False
        return all(not (g.adj[v] & self.X) for v in bits(self.X)) and all(
            not (g.adj[v] & self.Y) for v in bits(self.Y)
        )


def two_coloring(g: Graph, within: Optional[int] = None) -> Optional[tuple[int, int]]:
    """Proper 2-coloring of g[within] as (X, Y) bitsets, or None.

    In each component the lowest-index vertex goes to X.
    """
    alive = g.all_mask if within is None else within & g.all_mask
    X = Y = 0
    todo = alive
    while todo:
        root = todo & -todo
        side_a, side_b = root, 0
        frontier = root
        seen = root
        in_a = True
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= alive
            # a neighbour of the current layer on the same side means an odd cycle
            if in_a and nxt & side_a or not in_a and nxt & side_b:
                return None
            nxt &= ~seen
            if in_a:
                side_b |= nxt
            else:
                side_a |= nxt
            seen |= nxt
            frontier = nxt
            in_a = not in_a
        X |= side_a
        Y |= side_b
        todo &= ~seen
    return X, Y


def is_bipartite(g: Graph, within: Optional[int] = None) -> bool:
    return two_coloring(g, within) is not None


def bipartition(g: Graph) -> Optional[Bipartition]:
    coloring = two_coloring(g)
    if coloring is None:
        return None
    return Bipartition(*coloring)


def components(g: Graph, within: Optional[int] = None) -> list[int]:
    alive = g.all_mask if within is None else within & g.all_mask
    out = []
    while alive:
        seen = frontier = alive & -alive
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & alive & ~seen
            seen |= frontier
        out.append(seen)
        alive &= ~seen
    return out


# -- graph6 -------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphFormatError(f"byte outside the printable graph6 range in {s!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphFormatError("unsupported or truncated long-form vertex count")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > N_MAX:
        raise GraphFormatError(f"graph6 vertex count {n} exceeds {N_MAX}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise GraphFormatError(f"graph6 body too short: {len(body)} bytes, need {need}")
    if len(body) > need:
        raise GraphFormatError(f"trailing data after graph6 body in {s!r}")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if body[pos // 6] >> (5 - pos % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    if pos % 6 and body[-1] & ((1 << (6 - pos % 6)) - 1):
        raise GraphFormatError("non-zero padding bits in graph6 body")
    return Graph(n, tuple(adj))
