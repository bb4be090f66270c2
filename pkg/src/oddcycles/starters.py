"""(s, r+2)-starters: vertex sets whose every pair is joined by a path of
odd length 2j-1 with s <= j <= k."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .budget import Budget, as_budget
from .graph import Graph, bits


def path_lengths(
    g: Graph,
    u: int,
    v: int,
    lengths: Iterable[int],
    within: Optional[int] = None,
    budget: Budget | int | None = None,
) -> dict[int, tuple[int, ...]]:
    """Simple u-v paths inside ``within`` for each requested length (edges), one witness each."""
    if u == v:
        raise ValueError("path endpoints must differ")
    budget = as_budget(budget)
    region = g.all_mask if within is None else within & g.all_mask
    if not (region >> u & 1 and region >> v & 1):
        return {}
    wanted = {L for L in lengths if 1 <= L < region.bit_count()}
    found: dict[int, tuple[int, ...]] = {}
    adj = g.adj
    path = [u]

    def dfs(x: int, visited: int) -> None:
        budget.tick()
        p = len(path) - 1
        if x == v:
            if p in wanted:
                wanted.discard(p)
                found[p] = tuple(path)
            return
        free = region & ~visited
        # BFS from x: distance to v and how many vertices are still reachable
        layer = 1 << x
        seen = layer
        dist = None
        depth = 0
        while layer:
            if layer >> v & 1:
                dist = depth
                break
            nxt = 0
            for w in bits(layer):
                nxt |= adj[w]
            layer = nxt & free & ~seen
            seen |= layer
            depth += 1
        if dist is None:
            return
        lo = p + dist
        hi = p + (free | 1 << x).bit_count() - 1
        if not any(lo <= L <= hi for L in wanted):
            return
        for w in bits(adj[x] & free):
            path.append(w)
            dfs(w, visited | 1 << w)
            path.pop()
            if not wanted:
                return

    dfs(u, 1 << u)
    return dict(sorted(found.items()))


def odd_path_lengths(
    g: Graph, u: int, v: int, max_length: int, budget: Budget | int | None = None
) -> dict[int, tuple[int, ...]]:
    """Odd lengths <= max_length of simple u-v paths, with a witness path per length."""
    if max_length < 1:
        raise ValueError("max_length must be at least 1")
    return path_lengths(g, u, v, range(1, max_length + 1, 2), budget=budget)


@dataclass(frozen=True)
class StarterCertificate:
    vertices: tuple[int, ...]
    s: int
    k: int
    witnesses: dict  # (a, b) -> path tuple

    @property
    def r(self) -> int:
        return len(self.vertices) - 2

    def validate(self, g: Graph) -> bool:
        if len(self.witnesses) != len(self.vertices) * (len(self.vertices) - 1) // 2:
            return False
        for (a, b), path in self.witnesses.items():
            length = len(path) - 1
            if path[0] != a or path[-1] != b or len(set(path)) != len(path):
                return False
            if length % 2 == 0 or not 2 * self.s - 1 <= length <= 2 * self.k - 1:
                return False
            if any(not g.has_edge(path[i], path[i + 1]) for i in range(length)):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "set": list(self.vertices),
            "s": self.s,
            "k": self.k,
            "r": self.r,
            "witnesses": [
                {"pair": [a, b], "length": len(p) - 1, "path": list(p)}
                for (a, b), p in sorted(self.witnesses.items())
            ],
        }


def _allowed_lengths(s: int, k: int) -> list[int]:
    if not 1 <= s <= k:
        raise ValueError(f"need 1 <= s <= k, got s={s}, k={k}")
    return [2 * j - 1 for j in range(s, k + 1)]


def _pair_witness(g: Graph, a: int, b: int, lengths: list[int], budget: Budget):
    hits = path_lengths(g, a, b, lengths, budget=budget)
    if not hits:
        return None
    return hits[min(hits)]


def is_starter(
    g: Graph, vertices: Iterable[int], s: int, k: int, budget: Budget | int | None = None
) -> Optional[StarterCertificate]:
    budget = as_budget(budget)
    S = tuple(sorted(set(vertices)))
    if len(S) < 3:
        raise ValueError("a starter has r+2 >= 3 vertices")
    lengths = _allowed_lengths(s, k)
    witnesses = {}
    for a, b in combinations(S, 2):
        path = _pair_witness(g, a, b, lengths, budget)
        if path is None:
            return None
        witnesses[(a, b)] = path
    return StarterCertificate(S, s, k, witnesses)


def find_starter(
    g: Graph, r: int, s: int, k: int, budget: Budget | int | None = None
) -> Optional[StarterCertificate]:
    """Lexicographically first (s, r+2)-starter, or None."""
    if r < 1:
        raise ValueError("r must be at least 1")
    budget = as_budget(budget)
    lengths = _allowed_lengths(s, k)
    size = r + 2
    if size > g.n:
        return None
    # pairs joined by an admissible path form a compatibility graph; starters are its cliques
    compat = [0] * g.n
    paths = {}
    for a, b in combinations(range(g.n), 2):
        path = _pair_witness(g, a, b, lengths, budget)
        if path is not None:
            compat[a] |= 1 << b
            compat[b] |= 1 << a
            paths[(a, b)] = path

    def grow(chosen: list[int], cand: int) -> Optional[list[int]]:
        budget.tick()
        if len(chosen) == size:
            return chosen
        if len(chosen) + cand.bit_count() < size:
            return None
        for v in bits(cand):
            hit = grow(chosen + [v], cand & compat[v] & ~((2 << v) - 1))
            if hit:
                return hit
        return None

    clique = grow([], g.all_mask)
    if clique is None:
        return None
    witnesses = {(a, b): paths[(a, b)] for a, b in combinations(clique, 2)}
    return StarterCertificate(tuple(clique), s, k, witnesses)
