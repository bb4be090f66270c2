"""Canonical labelling by colour refinement plus individualisation search.

The search tree is the usual one: refine an ordered partition to an
equitable one, individualise each vertex of the first smallest
non-singleton cell, recurse. Leaves are discrete partitions; the
certificate of a leaf is the adjacency matrix under that ordering and the
canonical form is the largest certificate. Automorphisms found from
equal certificates prune children lying in one orbit of the pointwise
stabiliser of the current prefix.
"""

from __future__ import annotations

from .graph import Graph, bits, to_graph6


def refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Coarsest equitable refinement of an ordered partition (cells as bitsets)."""
    changed = True
    while changed:
        changed = False
        for splitter in list(cells):
            out = []
            for cell in cells:
                if cell & (cell - 1) == 0:
                    out.append(cell)
                    continue
                groups: dict[int, int] = {}
                for v in bits(cell):
                    c = (adj[v] & splitter).bit_count()
                    groups[c] = groups.get(c, 0) | 1 << v
                if len(groups) > 1:
                    changed = True
                    out.extend(groups[c] for c in sorted(groups))
                else:
                    out.append(cell)
            cells = out
    return cells


def _orbits(n: int, generators: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in generators:
        for v, w in enumerate(gamma):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.best_cert: tuple[int, ...] | None = None
        self.best_order: list[int] = []
        self.leaves: dict[tuple[int, ...], list[int]] = {}
        self.autos: list[list[int]] = []

    def certificate(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * self.g.n
        for p, v in enumerate(order):
            pos[v] = p
        rows = []
        for v in order:
            row = 0
            for w in bits(self.adj[v]):
                row |= 1 << pos[w]
            rows.append(row)
        return tuple(rows)

    def leaf(self, cells: list[int]) -> None:
        order = [c.bit_length() - 1 for c in cells]
        cert = self.certificate(order)
        seen = self.leaves.get(cert)
        if seen is not None:
            gamma = [0] * self.g.n
            for a, b in zip(seen, order):
                gamma[a] = b
            self.autos.append(gamma)
            return
        self.leaves[cert] = order
        if self.best_cert is None or cert > self.best_cert:
            self.best_cert = cert
            self.best_order = order

    def run(self, cells: list[int], prefix: list[int]) -> None:
        cells = refine(self.adj, cells)
        if len(cells) == self.g.n:
            self.leaf(cells)
            return
        size, idx = min((c.bit_count(), i) for i, c in enumerate(cells) if c & (c - 1))
        target = cells[idx]
        done: list[int] = []
        for v in bits(target):
            if done:
                stab = [a for a in self.autos if all(a[p] == p for p in prefix)]
                if stab:
                    orbit = _orbits(self.g.n, stab)
                    if any(orbit[u] == orbit[v] for u in done):
                        continue
            done.append(v)
            child = cells[:idx] + [1 << v, target & ~(1 << v)] + cells[idx + 1:]
            self.run(child, prefix + [v])


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order whose relabelled graph is the canonical representative."""
    if g.n == 0:
        return []
    degree_cells: dict[int, int] = {}
    for v in range(g.n):
        d = g.adj[v].bit_count()
        degree_cells[d] = degree_cells.get(d, 0) | 1 << v
    search = _Search(g)
    search.run([degree_cells[d] for d in sorted(degree_cells)], [])
    return search.best_order


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for p, v in enumerate(order):
        perm[v] = p
    return g.relabel(perm)


def canonical_form(g: Graph) -> bytes:
    return to_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
