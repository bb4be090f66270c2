"""Extremal constructions and the closed-form edge thresholds they meet.

Vertex numbering is fixed: bipartite sides first (larger side first), then
the non-shared vertices of each clique block in chain order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .graph import Graph, build


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("side sizes must be non-negative")
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph with part sizes floor(n/r) or ceil(n/r)."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    return build(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


def _bipartite_block(size: int) -> list[tuple[int, int]]:
    big = (size + 1) // 2
    return [(i, j) for i in range(big) for j in range(big, size)]


def _clique_on(vertices: list[int]) -> list[tuple[int, int]]:
    return list(combinations(vertices, 2))


def t_star(r: int, n: int) -> Graph:
    """Balanced complete bipartite block on n-r+1 vertices plus a K_r through vertex 0."""
    if r < 3:
        raise ValueError("t_star needs r >= 3")
    if n < r + 3:
        raise ValueError(f"t_star needs n >= r + 3, got r={r}, n={n}")
    size = n - r + 1
    edges = _bipartite_block(size)
    edges += _clique_on([0] + list(range(size, n)))
    return build(n, edges)


def t_star_star(k: int, b: int, n: int) -> Graph:
    """Three-block chain: bipartite block -(0)- K_2k -(w)- K_b.

    The bipartite block has n-r+2 vertices with r = 2k+b; w is the first
    non-shared vertex of the K_2k block.
    """
    if k < 2:
        raise ValueError("t_star_star needs k >= 2")
    if not 3 <= b <= 2 * k:
        raise ValueError(f"t_star_star needs 3 <= b <= 2k, got k={k}, b={b}")
    r = 2 * k + b
    size = n - r + 2
    if size < 2:
        raise ValueError(f"n={n} leaves no room for the bipartite block (need n >= {r})")
    edges = _bipartite_block(size)
    big_clique = [0] + list(range(size, size + 2 * k - 1))
    w = size
    small_clique = [w] + list(range(size + 2 * k - 1, n))
    edges += _clique_on(big_clique) + _clique_on(small_clique)
    return build(n, edges)


def edge_threshold(n: int, r: int) -> int:
    """floor((n-r+1)^2 / 4) + C(r, 2)."""
    return (n - r + 1) ** 2 // 4 + comb(r, 2)


def conj_threshold(n: int, k: int, b: int) -> int:
    """floor((n-r+2)^2 / 4) + C(2k, 2) + C(b, 2) with r = 2k+b."""
    r = 2 * k + b
    return (n - r + 2) ** 2 // 4 + comb(2 * k, 2) + comb(b, 2)


def split_pairs(r: int) -> int:
    """C(floor(r/2), 2) + C(ceil(r/2), 2): edges a K_r loses to its best cut."""
    return comb(r // 2, 2) + comb((r + 1) // 2, 2)


def gamma2_bound(r: int) -> int:
    return split_pairs(r)


def conj_gamma2_bound(k: int, b: int) -> int:
    return 2 * comb(k, 2) + split_pairs(b)


FAMILIES = ("complete_bipartite", "turan", "t_star", "t_star_star")


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    params: dict = field(default_factory=dict)

    def build(self) -> Graph:
        p = self.params
        if self.family == "complete_bipartite":
            return complete_bipartite(p["a"], p["b"])
        if self.family == "turan":
            return turan(p["n"], p["r"])
        if self.family == "t_star":
            return t_star(p["r"], p["n"])
        if self.family == "t_star_star":
            return t_star_star(p["k"], p["b"], p["n"])
        raise ValueError(f"unknown construction family {self.family!r}")
