"""Exact bipartization numbers.

gamma2 (fewest edge deletions) is e(G) minus the maximum cut, found by
branch and bound. d2 (fewest vertex deletions) is found by iterative
deepening that branches on the vertices of a shortest odd cycle, since
every deletion set must hit that cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .budget import Budget, BudgetExceeded, as_budget
from .graph import Bipartition, Graph, bits, two_coloring

MAX_CUT_CAP = 24


@dataclass(frozen=True)
class CutResult:
    value: int
    side: int  # bitset of the side holding vertex 0

    def split(self, n: int) -> Bipartition:
        return Bipartition(self.side, ((1 << n) - 1) & ~self.side)


@dataclass(frozen=True)
class BipartizationResult:
    kind: str  # "vertex" or "edge"
    removed: tuple
    size: int
    resulting_partition: Bipartition

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "size": self.size,
            "removed": [list(e) if isinstance(e, tuple) else e for e in self.removed],
            "residual_partition": {
                "X": list(bits(self.resulting_partition.X)),
                "Y": list(bits(self.resulting_partition.Y)),
            },
        }


# -- maximum cut --------------------------------------------------------------


class _CutSearch:
    """Depth-first branch and bound over side assignments.

    Bound: current cut, plus for each free vertex the better of its edges to
    either side, plus every edge among free vertices.
    """

    def __init__(self, g: Graph, order: list[int], budget: Budget):
        self.g = g
        self.order = order
        self.budget = budget
        # suffix masks of still-free vertices along the order
        self.free_after = [0] * (len(order) + 1)
        for i in range(len(order) - 1, -1, -1):
            self.free_after[i] = self.free_after[i + 1] | 1 << order[i]
        self.free_edges = [0] * (len(order) + 1)
        for i in range(len(order) - 1, -1, -1):
            v = order[i]
            self.free_edges[i] = self.free_edges[i + 1] + (g.adj[v] & self.free_after[i + 1]).bit_count()

    def bound(self, depth: int, a: int, b: int, cut: int) -> int:
        adj = self.g.adj
        extra = 0
        for v in bits(self.free_after[depth]):
            x = (adj[v] & a).bit_count()
            y = (adj[v] & b).bit_count()
            extra += x if x > y else y
        return cut + extra + self.free_edges[depth]

    def maximize(self, a: int, b: int, cut: int, best: int) -> tuple[int, int]:
        """Best (value, side-a mask) strictly above ``best``, else (best, -1)."""
        found = -1
        stack = [(0, a, b, cut)]
        order = self.order
        adj = self.g.adj
        while stack:
            depth, a, b, cut = stack.pop()
            self.budget.tick()
            if depth == len(order):
                if cut > best:
                    best, found = cut, a
                continue
            if self.bound(depth, a, b, cut) <= best:
                continue
            v = order[depth]
            to_a = (adj[v] & a).bit_count()
            to_b = (adj[v] & b).bit_count()
            # push the worse branch first so the greedy choice is explored first
            branches = [(depth + 1, a | 1 << v, b, cut + to_b), (depth + 1, a, b | 1 << v, cut + to_a)]
            if to_b >= to_a:
                branches.reverse()
            stack.extend(branches)
        return best, found

    def feasible(self, a: int, b: int, cut: int, target: int) -> Optional[int]:
        """Some completion reaching ``target``, as the side-a mask, or None."""
        stack = [(0, a, b, cut)]
        order = self.order
        adj = self.g.adj
        while stack:
            depth, a, b, cut = stack.pop()
            self.budget.tick()
            if depth == len(order):
                if cut >= target:
                    return a
                continue
            if self.bound(depth, a, b, cut) < target:
                continue
            v = order[depth]
            to_a = (adj[v] & a).bit_count()
            to_b = (adj[v] & b).bit_count()
            branches = [(depth + 1, a | 1 << v, b, cut + to_b), (depth + 1, a, b | 1 << v, cut + to_a)]
            if to_b >= to_a:
                branches.reverse()
            stack.extend(branches)
        return None


def _search_order(g: Graph, free: int, placed: int) -> list[int]:
    """Free vertices, each next one the most attached to those already placed."""
    order = []
    done = placed
    adj = g.adj
    while free:
        v = max(bits(free), key=lambda u: ((adj[u] & done).bit_count(), adj[u].bit_count(), -u))
        order.append(v)
        done |= 1 << v
        free &= ~(1 << v)
    return order


def _local_search_cut(g: Graph) -> int:
    """Value of a 1-flip local optimum from a greedy start (an incumbent)."""
    side = 0
    placed = 0
    for v in _search_order(g, g.all_mask, 0):
        into = (g.adj[v] & side & placed).bit_count()
        out = (g.adj[v] & ~side & placed).bit_count()
        if into < out:
            side |= 1 << v
        placed |= 1 << v
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            same = (g.adj[v] & (side if side >> v & 1 else ~side)).bit_count()
            other = g.degree(v) - same
            if same > other:
                side ^= 1 << v
                improved = True
    return sum(1 for u, v in g.edges() if (side >> u & 1) != (side >> v & 1))


def max_cut(g: Graph, budget: Budget | int | None = None, cap: int = MAX_CUT_CAP) -> CutResult:
    """Exact maximum cut.

    The witness is the side containing vertex 0 with the smallest bitmask
    among all optimal splits.
    """
    if g.n < 1:
        raise ValueError("max_cut needs at least one vertex")
    if g.n > cap:
        raise BudgetExceeded(f"max_cut limited to n <= {cap}, got n = {g.n}")
    budget = as_budget(budget)
    rest = g.all_mask & ~1
    search = _CutSearch(g, _search_order(g, rest, 1), budget)
    start = _local_search_cut(g)
    value, _ = search.maximize(1, 0, 0, start - 1)
    # fix vertices from the top down, preferring the side without vertex 0
    a, b = 1, 0
    for v in range(g.n - 1, 0, -1):
        trial_b = b | 1 << v
        free = rest & ~(a | trial_b)
        cut = sum((g.adj[u] & trial_b).bit_count() for u in bits(a))
        sub = _CutSearch(g, _search_order(g, free, a | trial_b), budget)
        if sub.feasible(a, trial_b, cut, value) is not None:
            b = trial_b
        else:
            a |= 1 << v
    return CutResult(value, a)


def max_cut_bruteforce(g: Graph) -> int:
    """Reference value by enumerating all 2^(n-1) splits."""
    if g.n <= 1:
        return 0
    edges = g.edges()
    best = 0
    for mask in range(1 << (g.n - 1)):
        side = mask << 1 | 1
        cut = sum(1 for u, v in edges if (side >> u & 1) != (side >> v & 1))
        if cut > best:
            best = cut
    return best


def gamma2(g: Graph, budget: Budget | int | None = None, cap: int = MAX_CUT_CAP) -> BipartizationResult:
    if g.n == 0:
        return BipartizationResult("edge", (), 0, Bipartition(0, 0))
    cut = max_cut(g, budget, cap)
    side = cut.side
    removed = tuple((u, v) for u, v in g.edges() if (side >> u & 1) == (side >> v & 1))
    return BipartizationResult("edge", removed, g.m - cut.value, cut.split(g.n))


# -- odd cycle transversal ------------------------------------------------------


def _shortest_odd_cycle(g: Graph, alive: int) -> Optional[list[int]]:
    """Vertices of a shortest odd cycle of g[alive], preferring low start vertices."""
    adj = g.adj
    best: Optional[list[int]] = None
    for s in bits(alive):
        # BFS on (vertex, parity) states; parent pointers rebuild the walk
        parent = {(s, 0): None}
        frontier = [(s, 0)]
        hit = None
        while frontier and hit is None:
            nxt = []
            for v, p in frontier:
                for w in bits(adj[v] & alive):
                    state = (w, p ^ 1)
                    if state in parent:
                        continue
                    parent[state] = (v, p)
                    if state == (s, 1):
                        hit = state
                        break
                    nxt.append(state)
                if hit:
                    break
            frontier = nxt
        if hit is None:
            continue
        walk = []
        state = hit
        while state is not None:
            walk.append(state[0])
            state = parent[state]
        walk.pop()
        if best is None or len(walk) < len(best):
            best = walk
            if len(best) == 3:
                break
    return best


def _transversals(g: Graph, alive: int, t: int, budget: Budget) -> set[int]:
    """Deletion sets of size <= t making g[alive] bipartite.

    Every minimum set is produced: it must contain some vertex of the
    shortest odd cycle branched on.
    """
    budget.tick()
    cyc = _shortest_odd_cycle(g, alive)
    if cyc is None:
        return {0}
    if t == 0:
        return set()
    out: set[int] = set()
    for v in sorted(set(cyc)):
        for rest in _transversals(g, alive & ~(1 << v), t - 1, budget):
            out.add(rest | 1 << v)
    return out


def d2(g: Graph, budget: Budget | int | None = None) -> BipartizationResult:
    """Minimum vertex deletion set making g bipartite (lexicographically least)."""
    budget = as_budget(budget)
    t = 0
    while True:
        sols = _transversals(g, g.all_mask, t, budget)
        sols = {s for s in sols if s.bit_count() == t}
        if sols:
            break
        t += 1
    best = min(sols, key=lambda s: sorted(bits(s)))
    alive = g.all_mask & ~best
    X, Y = two_coloring(g, alive)
    return BipartizationResult("vertex", tuple(bits(best)), t, Bipartition(X, Y))


def d2_bruteforce(g: Graph) -> int:
    """Reference value: smallest subset size whose removal leaves a bipartite graph."""
    from itertools import combinations

    for t in range(g.n + 1):
        for removed in combinations(range(g.n), t):
            keep = g.all_mask
            for v in removed:
                keep &= ~(1 << v)
            if two_coloring(g, keep) is not None:
                return t
    return g.n
