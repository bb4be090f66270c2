"""Exact cycle structure: spectrum, odd girth, longest odd cycle, chords.

All searches are backtracking over simple paths. A cycle lives inside one
biconnected block, so searches run block by block; bipartite blocks are
skipped when only odd lengths are wanted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

import networkx as nx

from .budget import Budget, as_budget
from .graph import Graph, bits, build, components, is_bipartite, mask_of


@dataclass(frozen=True)
class Cycle:
    """Ordered vertex sequence v0 .. v(L-1); v(L-1) closes back to v0."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise ValueError(f"not a cycle: {vs}")

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_odd(self) -> bool:
        return len(self.vertices) % 2 == 1

    def __len__(self) -> int:
        return len(self.vertices)

    def normalized(self) -> "Cycle":
        """Rotate so the lowest vertex is first and its lower neighbour second."""
        vs = self.vertices
        i = vs.index(min(vs))
        fwd = vs[i:] + vs[:i]
        if fwd[-1] < fwd[1]:
            fwd = (fwd[0],) + tuple(reversed(fwd[1:]))
        return Cycle(fwd)

    def same_as(self, other: "Cycle") -> bool:
        return self.normalized() == other.normalized()

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        if any(not 0 <= v < g.n for v in vs):
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def distance(self, i: int, j: int) -> int:
        """Cycle distance between positions i and j (shorter arc)."""
        d = abs(i - j) % len(self)
        return min(d, len(self) - d)

    def to_json(self) -> list[int]:
        return list(self.vertices)


# -- block decomposition ------------------------------------------------------


def blocks(g: Graph) -> list[int]:
    """Vertex bitsets of the biconnected blocks that contain a cycle."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return sorted(mask_of(b) for b in nx.biconnected_components(h) if len(b) >= 3)


# -- core search ----------------------------------------------------------------


def _search(
    g: Graph,
    region: int,
    wanted: set[int],
    found: dict[int, tuple[int, ...]],
    budget: Budget,
) -> None:
    """Find cycles inside ``region`` whose lengths are in ``wanted``.

    ``wanted`` shrinks as lengths are found; each hit stores one path in ``found``.
    """
    adj = g.adj
    for s in bits(region):
        if not wanted:
            return
        allowed = region & ~((2 << s) - 1)
        if allowed.bit_count() + 1 < min(wanted):
            return
        ns = adj[s]
        path = [s]

        def dfs(v: int, visited: int) -> None:
            budget.tick()
            p = len(path) - 1
            if p >= 2 and adj[v] >> s & 1 and (p + 1) in wanted:
                wanted.discard(p + 1)
                found[p + 1] = tuple(path)
                if not wanted:
                    return
            # layered BFS from v through unvisited allowed vertices
            free = allowed & ~visited
            layer = 1 << v
            seen = layer
            back = None
            depth = 0
            while layer:
                if back is None and layer & ns:
                    back = depth + 1
                nxt = 0
                for w in bits(layer):
                    nxt |= adj[w]
                layer = nxt & free & ~seen
                seen |= layer
                depth += 1
            if back is None:
                return
            hi = p + seen.bit_count()
            lo = p + back
            if not any(lo <= length <= hi for length in wanted):
                return
            for w in bits(adj[v] & free):
                path.append(w)
                dfs(w, visited | 1 << w)
                path.pop()
                if not wanted:
                    return

        for w in bits(ns & allowed):
            if not wanted:
                break
            path.append(w)
            dfs(w, 1 << s | 1 << w)
            path.pop()


def find_cycles(
    g: Graph,
    lengths: Iterable[int],
    budget: Budget | int | None = None,
    by_block: bool = True,
) -> dict[int, Cycle]:
    """One witness cycle for every requested length that occurs in g.

    ``by_block=False`` searches the whole vertex set at once, which is
    cheaper for many tiny graphs.
    """
    budget = as_budget(budget)
    wanted_all = {L for L in lengths if 3 <= L <= g.n}
    found: dict[int, tuple[int, ...]] = {}
    if not by_block:
        _search(g, g.all_mask, wanted_all, found, budget)
        return {L: Cycle(p).normalized() for L, p in sorted(found.items())}
    for block in blocks(g):
        size = block.bit_count()
        wanted = {L for L in wanted_all if L <= size}
        if is_bipartite(g, block):
            wanted = {L for L in wanted if L % 2 == 0}
        if not wanted:
            continue
        local: dict[int, tuple[int, ...]] = {}
        _search(g, block, wanted, local, budget)
        for L, p in local.items():
            found[L] = p
            wanted_all.discard(L)
        if not wanted_all:
            break
    return {L: Cycle(p).normalized() for L, p in sorted(found.items())}


def cycle_spectrum(g: Graph, budget: Budget | int | None = None) -> dict[int, Cycle]:
    """Every cycle length of g mapped to a witness cycle."""
    return find_cycles(g, range(3, g.n + 1), budget)


def has_cycle_of_length(g: Graph, length: int, budget: Budget | int | None = None) -> bool:
    return bool(find_cycles(g, [length], budget))


def girth(g: Graph, budget: Budget | int | None = None) -> Optional[int]:
    budget = as_budget(budget)
    for L in range(3, g.n + 1):
        if find_cycles(g, [L], budget):
            return L
    return None


def circumference(g: Graph, budget: Budget | int | None = None) -> Optional[int]:
    budget = as_budget(budget)
    for L in range(g.n, 2, -1):
        if find_cycles(g, [L], budget):
            return L
    return None


def odd_girth(g: Graph) -> Optional[int]:
    """Length of a shortest odd cycle, or None when g is bipartite.

    A shortest odd closed walk is a cycle, so this is a walk computation:
    the first odd t with v reachable from itself in exactly t steps.
    """
    best = None
    adj = g.adj
    for v in range(g.n):
        if not adj[v]:
            continue
        layer = 1 << v
        limit = 2 * g.n + 1 if best is None else best - 2
        for t in range(1, limit + 1):
            nxt = 0
            for w in bits(layer):
                nxt |= adj[w]
            layer = nxt
            if t % 2 and layer >> v & 1:
                best = t
                break
    return best


def longest_odd_cycle(g: Graph, budget: Budget | int | None = None) -> Optional[Cycle]:
    budget = as_budget(budget)
    top = g.n if g.n % 2 else g.n - 1
    for L in range(top, 2, -2):
        hit = find_cycles(g, [L], budget)
        if hit:
            return hit[L]
    return None


def is_c2k1_free(g: Graph, k: int, budget: Budget | int | None = None) -> bool:
    """True iff g has no cycle of length exactly 2k+1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return not find_cycles(g, [2 * k + 1], budget, by_block=g.n > 12)


def shortest_r_admissible(g: Graph, r: int, budget: Budget | int | None = None) -> Optional[Cycle]:
    """A shortest odd cycle of length greater than r, or None."""
    if r < 3:
        raise ValueError("r must be at least 3")
    budget = as_budget(budget)
    start = r + 1 if r % 2 == 0 else r + 2
    for L in range(start, g.n + 1, 2):
        hit = find_cycles(g, [L], budget)
        if hit:
            return hit[L]
    return None


def is_weakly_pancyclic(g: Graph, budget: Budget | int | None = None) -> bool:
    spectrum = cycle_spectrum(g, budget)
    if not spectrum:
        raise ValueError("weak pancyclicity needs a graph with a cycle (girth undefined)")
    lo, hi = min(spectrum), max(spectrum)
    return all(L in spectrum for L in range(lo, hi + 1))


# -- chords on a fixed cycle ------------------------------------------------------


class Relation(str, Enum):
    PRECEDES = "precedes"
    SUCCEEDS = "succeeds"
    CROSSES = "crosses"
    SHARES_ENDPOINT = "shares-endpoint"
    DISJOINT_NONCROSSING = "disjoint-noncrossing"


@dataclass(frozen=True)
class Chord:
    """Edge between positions i < j of ``host`` that are not consecutive."""

    host: Cycle
    i: int
    j: int

    def __post_init__(self) -> None:
        i, j = sorted((self.i, self.j))
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)
        L = len(self.host)
        if not 0 <= i < j < L:
            raise ValueError(f"chord positions ({i}, {j}) outside host of length {L}")
        if self.host.distance(i, j) < 2:
            raise ValueError(f"positions ({i}, {j}) are consecutive on the host")

    @property
    def endpoints(self) -> tuple[int, int]:
        vs = self.host.vertices
        return vs[self.i], vs[self.j]

    def odd_cycle_positions(self) -> list[int]:
        """Positions of the odd chord cycle: chord plus the even arc."""
        L = len(self.host)
        i, j = self.i, self.j
        if (j - i) % 2 == 0:
            return list(range(i, j + 1))
        return [i] + [p % L for p in range(j, i + L)]


def _check_host(g: Graph, c: Cycle) -> None:
    if not c.is_valid_in(g):
        raise ValueError(f"{c.vertices} is not a cycle of the graph")


def chords(g: Graph, c: Cycle) -> list[Chord]:
    _check_host(g, c)
    vs = c.vertices
    L = len(vs)
    out = []
    for i in range(L):
        for j in range(i + 2, L):
            if i == 0 and j == L - 1:
                continue
            if g.has_edge(vs[i], vs[j]):
                out.append(Chord(c, i, j))
    return out


def odd_chord_cycle(ch: Chord) -> Cycle:
    if not ch.host.is_odd:
        raise ValueError("odd chord cycles need an odd host cycle")
    vs = ch.host.vertices
    return Cycle(tuple(vs[p] for p in ch.odd_cycle_positions()))


def maximum_chords(g: Graph, c: Cycle) -> list[Chord]:
    if not c.is_odd:
        raise ValueError("maximum chords need an odd host cycle")
    all_chords = chords(g, c)
    if not all_chords:
        return []
    sizes = [len(ch.odd_cycle_positions()) for ch in all_chords]
    top = max(sizes)
    return [ch for ch, s in zip(all_chords, sizes) if s == top]


def _alternate(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (p, q), (s, t) = a, b
    return (p < s < q) != (p < t < q)


def chord_relation(first: Chord, second: Chord) -> Relation:
    """Classify two chords of one odd host cycle.

    ``PRECEDES`` means the odd chord cycle of ``first`` lies inside that of
    ``second``. Chords with one common endpoint get ``SHARES_ENDPOINT``.
    """
    if first.host != second.host:
        raise ValueError("chords lie on different host cycles")
    if not first.host.is_odd:
        raise ValueError("chord relations need an odd host cycle")
    a, b = (first.i, first.j), (second.i, second.j)
    if a == b:
        raise ValueError("a chord is not related to itself")
    if set(a) & set(b):
        return Relation.SHARES_ENDPOINT
    pa, pb = set(first.odd_cycle_positions()), set(second.odd_cycle_positions())
    if pa <= pb:
        return Relation.PRECEDES
    if pb <= pa:
        return Relation.SUCCEEDS
    if _alternate(a, b):
        return Relation.CROSSES
    return Relation.DISJOINT_NONCROSSING


@dataclass(frozen=True)
class AuxiliaryForest:
    graph: Graph
    is_forest: bool
    tree_count: int
    odd_side: tuple[int, ...]
    even_side: tuple[int, ...]


def auxiliary_forest(c: Cycle, chord_list: list[Chord], h: int) -> AuxiliaryForest:
    """Chord graph on the window of positions 0 .. 2h+1 of ``c``.

    Vertex p of the result is host position p. The odd side holds positions
    0, 2, .., 2h (c1, c3, .. in one-based naming), the even side 1, 3, .., 2h+1.
    """
    width = 2 * h + 2
    if width > len(c):
        raise ValueError(f"window of {width} positions exceeds host length {len(c)}")
    edges = []
    for ch in chord_list:
        if ch.host != c:
            raise ValueError("chord lies on a different host cycle")
        if ch.j >= width:
            raise ValueError(f"chord ({ch.i}, {ch.j}) leaves the window 0..{width - 1}")
        edges.append((ch.i, ch.j))
    gamma = build(width, edges)
    count = len(components(gamma))
    return AuxiliaryForest(
        graph=gamma,
        is_forest=gamma.m == width - count,
        tree_count=count,
        odd_side=tuple(range(0, width, 2)),
        even_side=tuple(range(1, width, 2)),
    )
