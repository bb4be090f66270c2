"""Exhaustive small-graph enumeration, labelled or one per isomorphism class."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Optional

from .canon import canonical_form
from .graph import Graph, bits, from_graph6

LABELED_CAP = 7
ISO_CAP = 10

Predicate = Callable[[Graph], bool]


def labeled_graphs(n: int, predicate: Optional[Predicate] = None) -> Iterator[Graph]:
    """All 2^C(n,2) graphs on vertex set 0..n-1, in edge-mask order."""
    if n > LABELED_CAP:
        raise ValueError(f"labeled enumeration is capped at n <= {LABELED_CAP}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for i in bits(mask):
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        g = Graph(n, tuple(adj))
        if predicate is None or predicate(g):
            yield g


def _extensions(h: Graph) -> Iterator[Graph]:
    """Add vertex n with each neighbourhood whose size is at most every resulting degree.

    Every graph arises this way from deleting one of its minimum-degree vertices.
    """
    n = h.n
    degs = h.degrees()
    for nb in range(1 << n):
        d = nb.bit_count()
        if any(degs[v] + (nb >> v & 1) < d for v in range(n)):
            continue
        adj = list(h.adj)
        for v in bits(nb):
            adj[v] |= 1 << n
        adj.append(nb)
        yield Graph(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def _iso_classes(n: int, hereditary: Optional[Predicate]) -> tuple[str, ...]:
    if n == 0:
        return ("?",)
    parents = [from_graph6(s) for s in _iso_classes(n - 1, hereditary)]
    seen: dict[bytes, None] = {}
    for h in parents:
        for g in _extensions(h):
            if hereditary is not None and not hereditary(g):
                continue
            seen.setdefault(canonical_form(g), None)
    return tuple(sorted(f.decode() for f in seen))


def iso_graphs(
    n: int,
    predicate: Optional[Predicate] = None,
    hereditary: Optional[Predicate] = None,
) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on n vertices.

    ``hereditary`` must be closed under vertex deletion; it prunes during
    augmentation and its results are cached per function object.
    ``predicate`` filters only the final level.
    """
    if n > ISO_CAP:
        raise ValueError(f"isomorphism-class enumeration is capped at n <= {ISO_CAP}")
    for s in _iso_classes(n, hereditary):
        g = from_graph6(s)
        if predicate is None or predicate(g):
            yield g


def enumerate_graphs(
    n: int,
    predicate: Optional[Predicate] = None,
    mode: str = "up_to_iso",
    hereditary: Optional[Predicate] = None,
) -> Iterator[Graph]:
    if mode == "labeled":
        both = predicate
        if hereditary is not None:
            both = (lambda g: hereditary(g) and (predicate is None or predicate(g)))
        return labeled_graphs(n, both)
    if mode in ("up_to_iso", "iso"):
        return iso_graphs(n, predicate, hereditary)
    raise ValueError(f"unknown enumeration mode {mode!r}")


@lru_cache(maxsize=None)
def c2k1_free(k: int) -> Predicate:
    """Shared predicate object for "no cycle of length 2k+1" (cache-friendly)."""
    from .cycles import is_c2k1_free

    def pred(g: Graph) -> bool:
        return is_c2k1_free(g, k)

    pred.__name__ = f"c{2 * k + 1}_free"
    return pred
