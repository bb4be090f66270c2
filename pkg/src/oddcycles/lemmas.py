"""Exhaustive and sampled sweeps for the unconditional structure lemmas.

Where a lemma pins a substructure (an odd host cycle with its chords and
a few outside vertices) the sweep fixes that structure and varies only
the free parts, instead of enumerating whole graphs.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Callable, Iterable, Optional

import numpy as np

from .budget import Budget, BudgetExceeded
from .cycles import Chord, Cycle, auxiliary_forest, find_cycles
from .enumeration import c2k1_free, enumerate_graphs
from .graph import Graph, bits, is_bipartite, to_graph6
from .instances import check_common_neighbourhood, large_n_bound
from .constructions import edge_threshold
from .reports import EXHAUSTIVE, SAMPLED, TARGETED, VerificationReport
from .starters import path_lengths

# chord spaces up to this many chords are swept without a filter
FULL_SWEEP_CHORDS = 14

LEMMA_IDS = ("www", "degree", "outside", "gchords", "aaa", "l1")


# -- host cycle helpers ---------------------------------------------------------


def host_chords(L: int) -> list[tuple[int, int]]:
    """Position pairs of C_L at cycle distance >= 2, in lexicographic order."""
    return [(i, j) for i, j in combinations(range(L), 2) if min(j - i, L - j + i) >= 2]


def host_rows(L: int, chord_mask: int, chord_list: list[tuple[int, int]], extra: int = 0) -> list[int]:
    """Adjacency rows of C_L plus the chosen chords, padded with ``extra`` isolated vertices."""
    rows = [0] * (L + extra)
    for i in range(L):
        j = (i + 1) % L
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    for c in bits(chord_mask):
        i, j = chord_list[c]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return rows


def attach(rows: list[int], vertex: int, nbhd: int) -> None:
    rows[vertex] |= nbhd
    for v in bits(nbhd):
        rows[v] |= 1 << vertex


def chord_sets_avoiding(L: int, forbidden: Iterable[int], budget: Optional[Budget] = None) -> list[int]:
    """Every chord subset of C_L whose graph has no cycle with a forbidden length.

    Adding chords only adds cycles, so the search prunes a subset as soon as
    it contains a forbidden cycle; the result covers the full 2^c space.
    """
    forbidden = sorted(set(forbidden))
    chords = host_chords(L)
    out = []

    def ok(mask: int) -> bool:
        if not forbidden:
            return True
        g = Graph(L, tuple(host_rows(L, mask, chords)))
        return not find_cycles(g, forbidden, budget, by_block=False)

    def grow(start: int, mask: int) -> None:
        out.append(mask)
        for c in range(start, len(chords)):
            nxt = mask | 1 << c
            if ok(nxt):
                grow(c + 1, nxt)

    if ok(0):
        grow(0, 0)
    return sorted(out)


def neighbourhoods(L: int, min_size: int = 0) -> list[int]:
    return [nb for nb in range(1 << L) if nb.bit_count() >= min_size]


def short_odd_walks(batch: np.ndarray, length: int) -> np.ndarray:
    """For each adjacency matrix in ``batch``: is there a closed walk of odd ``length``?

    An odd closed walk of length t extends to t+2 by stepping back and
    forth on an edge, so this is "has an odd cycle of length <= length".
    """
    power = batch.copy()
    for _ in range(length - 1):
        power = np.minimum(power @ batch, 1)
    return np.trace(power, axis1=1, axis2=2) > 0


# -- degree: three neighbours on an odd cycle give a shorter odd cycle -----------


def _degree_chunk(args: tuple[int, list[int]]) -> tuple[int, list[tuple[str, str]]]:
    L, chord_masks = args
    chords = host_chords(L)
    nbs = neighbourhoods(L, 3)
    checked = 0
    bad = []
    for cm in chord_masks:
        rows = host_rows(L, cm, chords, extra=1)
        base = np.zeros((L + 1, L + 1), dtype=np.int64)
        for v in range(L):
            for w in bits(rows[v]):
                base[v, w] = 1
        batch = np.repeat(base[None, :, :], len(nbs), axis=0)
        for idx, nb in enumerate(nbs):
            for v in bits(nb):
                batch[idx, v, L] = batch[idx, L, v] = 1
        has = short_odd_walks(batch, L - 2)
        checked += len(nbs)
        for idx in np.flatnonzero(~has):
            g_rows = list(rows)
            attach(g_rows, L, nbs[idx])
            g = Graph(L + 1, tuple(g_rows))
            bad.append((to_graph6(g), f"no odd cycle shorter than {L} with N(v)={list(bits(nbs[idx]))}"))
    return checked, bad


def verify_degree(m: int = 2, sample: Optional[int] = None, seed: int = 0, jobs: int = 1) -> VerificationReport:
    """Host C_{2m+1}, every chord subset, one outside vertex with >= 3 neighbours."""
    if m < 2:
        raise ValueError("this sweep needs m >= 2")
    started = time.perf_counter()
    L = 2 * m + 1
    nchords = len(host_chords(L))
    space = (1 << nchords) * len(neighbourhoods(L, 3))
    if sample is None and nchords <= FULL_SWEEP_CHORDS:
        masks = list(range(1 << nchords))
        report = VerificationReport("degree", {"m": m, "host_length": L}, EXHAUSTIVE, space=space)
    else:
        rng = random.Random(seed)
        count = sample or 1000
        masks = sorted(rng.getrandbits(nchords) for _ in range(count))
        report = VerificationReport(
            "degree", {"m": m, "host_length": L, "chord_samples": count}, SAMPLED, seed=seed, space=space
        )
    chunk = max(1, len(masks) // (8 * max(jobs, 1)))
    pieces = [(L, masks[i:i + chunk]) for i in range(0, len(masks), chunk)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_degree_chunk, pieces))
    else:
        results = [_degree_chunk(p) for p in pieces]
    for checked, bad in results:
        report.checked += checked
        for g6, detail in bad:
            report.add(g6, detail)
    return report.finish(started)


# -- www: outside vertices see at most ell vertices of a long odd cycle --------


def verify_www(k: int = 2, ell: Optional[int] = None, budget: Optional[int] = None) -> VerificationReport:
    """Host C_{2ell+1}, chord subsets and one outside vertex; whole graph C_{2k+1}-free."""
    if k < 2:
        raise ValueError("this sweep needs k >= 2")
    ell = k + 1 if ell is None else ell
    if ell < k + 1:
        raise ValueError("this sweep needs ell >= k+1")
    started = time.perf_counter()
    L = 2 * ell + 1
    target = 2 * k + 1
    chords = host_chords(L)
    report = VerificationReport(
        "www", {"k": k, "ell": ell, "host_length": L}, TARGETED, space=(1 << len(chords)) * (1 << L)
    )
    nodes = Budget(budget)
    try:
        masks = chord_sets_avoiding(L, [target], nodes)
        report.notes["chord_sets_meeting_hypothesis"] = len(masks)
        for cm in masks:
            for nb in range(1 << L):
                rows = host_rows(L, cm, chords, extra=1)
                attach(rows, L, nb)
                g = Graph(L + 1, tuple(rows))
                if find_cycles(g, [target], nodes, by_block=False):
                    continue
                report.checked += 1
                if nb.bit_count() > ell:
                    report.add(to_graph6(g), f"outside vertex has {nb.bit_count()} > {ell} neighbours on C")
    except BudgetExceeded:
        report.complete = False
    return report.finish(started)


# -- outside: two outside vertices are joined by a short odd path -----------------


def _single_neighbourhoods(m: int, cm: int, nodes: Budget) -> list[int]:
    """Neighbourhoods (>= 3 vertices of C) one outside vertex can have without a C_{2m-1}.

    A forbidden cycle through C and one outside vertex already rules out
    every pair containing that neighbourhood.
    """
    L = 2 * m + 1
    chords = host_chords(L)
    out = []
    for nb in neighbourhoods(L, 3):
        rows = host_rows(L, cm, chords, extra=1)
        attach(rows, L, nb)
        if not find_cycles(Graph(L + 1, tuple(rows)), [2 * m - 1], nodes, by_block=False):
            out.append(nb)
    return out


def _outside_config(m: int, cm: int, xy: int, nx_: int, ny: int, nodes: Budget):
    """None if the configuration misses the hypothesis, else (graph6, ok)."""
    L = 2 * m + 1
    x, y = L, L + 1
    rows = host_rows(L, cm, host_chords(L), extra=2)
    if xy:
        attach(rows, x, 1 << y)
    attach(rows, x, nx_)
    attach(rows, y, ny)
    g = Graph(L + 2, tuple(rows))
    if find_cycles(g, [2 * m - 1], nodes, by_block=False):
        return None
    ok = bool(path_lengths(g, x, y, range(1, 2 * m - 2, 2), budget=nodes))
    return to_graph6(g), ok


def _outside_chunk(args: tuple[int, list[tuple[int, int]], Optional[int]]):
    m, configs, budget = args
    nodes = Budget(budget)
    checked = 0
    bad = []
    for cm, xy in configs:
        single = _single_neighbourhoods(m, cm, nodes)
        for nx_ in single:
            for ny in single:
                res = _outside_config(m, cm, xy, nx_, ny, nodes)
                if res is None:
                    continue
                checked += 1
                if not res[1]:
                    bad.append((res[0], f"no odd x-y path of length <= {2 * m - 3}"))
    return checked, bad


def verify_outside(
    m: int = 3,
    with_chords: bool = True,
    sample: Optional[int] = None,
    seed: int = 0,
    jobs: int = 1,
    budget: Optional[int] = None,
) -> VerificationReport:
    """Host C_{2m+1}, two outside vertices with >= 3 neighbours each, no C_{2m-1}.

    Configurations vary the chord set (those free of C_{2m-1}), the x-y
    edge, and both neighbourhoods. Sampled mode draws a configuration,
    then both neighbourhoods among those that pass the single-vertex filter.
    """
    if m < 3:
        raise ValueError("this sweep needs m >= 3")
    started = time.perf_counter()
    L = 2 * m + 1
    nb_count = len(neighbourhoods(L, 3))
    masks = chord_sets_avoiding(L, [2 * m - 1]) if with_chords else [0]
    configs = [(cm, xy) for cm in masks for xy in (0, 1)]
    params = {"m": m, "host_length": L, "chords": with_chords}
    space = len(configs) * nb_count**2
    if sample is None:
        report = VerificationReport("outside", params, TARGETED, space=space)
        results = _run(_outside_chunk, [(m, [c], budget) for c in configs], jobs)
    else:
        report = VerificationReport("outside", dict(params, samples=sample), SAMPLED, seed=seed, space=space)
        results = [_outside_sampled(m, configs, random.Random(seed), sample, budget)]
    report.notes["chord_sets_meeting_hypothesis"] = len(masks)
    for checked, bad in results:
        report.checked += checked
        for g6, detail in bad:
            report.add(g6, detail)
    return report.finish(started)


def _outside_sampled(m, configs, rng, sample, budget):
    nodes = Budget(budget)
    singles: dict[int, list[int]] = {}
    checked = 0
    bad = []
    for _ in range(sample):
        cm, xy = configs[rng.randrange(len(configs))]
        if cm not in singles:
            singles[cm] = _single_neighbourhoods(m, cm, nodes)
        single = singles[cm]
        if not single:
            continue
        res = _outside_config(m, cm, xy, single[rng.randrange(len(single))], single[rng.randrange(len(single))], nodes)
        if res is None:
            continue
        checked += 1
        if not res[1]:
            bad.append((res[0], f"no odd x-y path of length <= {2 * m - 3}"))
    return checked, bad


def _run(fn: Callable, pieces: list, jobs: int) -> list:
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(fn, pieces))
    return [fn(p) for p in pieces]


# -- gchords: many chords on a shortest r-admissible cycle ------------------------


def _odd_paths_short(g: Graph, m: int) -> Optional[tuple[int, int]]:
    """First pair of distinct cycle vertices with no odd path of length <= 2m-3, if any."""
    lengths = list(range(1, 2 * m - 2, 2))
    for u, v in combinations(range(2 * m + 1), 2):
        if not path_lengths(g, u, v, lengths):
            return (u, v)
    return None


def chord_window(c: Cycle, chord_list: list[Chord]):
    """Relabel ``c`` so a maximum chord becomes (0, 2h) and every chord lies in
    positions 0 .. 2h+1. Returns (h, relabelled cycle, relabelled chords) or None."""
    L = len(c)
    sizes = [len(ch.odd_cycle_positions()) for ch in chord_list]
    top = max(sizes)
    h = (top - 1) // 2
    for ch, size in zip(chord_list, sizes):
        if size != top:
            continue
        # the even arc runs forward from ``start`` for 2h steps
        start = ch.i if (ch.j - ch.i) % 2 == 0 else ch.j
        for pos in (lambda q: (q - start) % L, lambda q: (start + 2 * h - q) % L):
            new_vs = [0] * L
            for q in range(L):
                new_vs[pos(q)] = c.vertices[q]
            host = Cycle(tuple(new_vs))
            moved = [Chord(host, pos(x.i), pos(x.j)) for x in chord_list]
            if all(x.j <= 2 * h + 1 for x in moved) and any((x.i, x.j) == (0, 2 * h) for x in moved):
                return h, host, moved
    return None


def verify_gchords(
    m: int = 3, r: int = 3, sample: Optional[int] = None, seed: int = 0, budget: Optional[int] = None
) -> VerificationReport:
    """C_{2m+1} plus chords, C a shortest r-admissible cycle, no odd (2m-1)-cycle.

    Checks the conclusion whenever C has >= r chords. On every instance
    where the conclusion fails (any chord count), also checks the chord
    window, that the auxiliary chord graph is a forest of >= 2 trees, and
    that C has at most r-1 chords.
    """
    L = 2 * m + 1
    if not 3 <= r < L:
        raise ValueError(f"need 3 <= r < 2m+1, got r={r}, m={m}")
    started = time.perf_counter()
    forbidden = {L2 for L2 in range(r + 1, L) if L2 % 2 == 1} | {2 * m - 1}
    chords = host_chords(L)
    nodes = Budget(budget)
    params = {"m": m, "r": r, "host_length": L}
    if sample is None:
        masks = chord_sets_avoiding(L, forbidden, nodes)
        report = VerificationReport("gchords", params, TARGETED, space=1 << len(chords))
    else:
        rng = random.Random(seed)
        drawn = sorted({rng.getrandbits(len(chords)) for _ in range(sample)})
        masks = [cm for cm in drawn if not find_cycles(Graph(L, tuple(host_rows(L, cm, chords))), forbidden, nodes, by_block=False)]
        report = VerificationReport("gchords", dict(params, samples=sample), SAMPLED, seed=seed, space=1 << len(chords))
    premise = forest_checked = 0
    for cm in masks:
        g = Graph(L, tuple(host_rows(L, cm, chords)))
        count = cm.bit_count()
        failing = _odd_paths_short(g, m)
        if count >= r:
            report.checked += 1
            if failing is not None:
                report.add(to_graph6(g), f"{count} chords but no short odd path between {failing}")
        if failing is None:
            continue
        premise += 1
        if count == 0:
            continue
        host = Cycle(tuple(range(L)))
        found = chord_window(host, [Chord(host, *chords[c]) for c in bits(cm)])
        g6 = to_graph6(g)
        if found is None:
            report.add(g6, "chords do not fit the window next to a maximum chord")
            continue
        h, new_host, moved = found
        forest = auxiliary_forest(new_host, moved, h)
        forest_checked += 1
        if not forest.is_forest or forest.tree_count < 2:
            report.add(g6, f"auxiliary chord graph is not a forest of >= 2 trees (h={h})")
        if 2 * h + 1 > r:
            report.add(g6, f"maximum chord cycle of length {2 * h + 1} exceeds r={r}")
        if count > r - 1:
            report.add(g6, f"{count} chords although some pair lacks a short odd path")
    report.notes["hypothesis_chord_sets"] = len(masks)
    report.notes["conclusion_failing_sets"] = premise
    report.notes["forests_checked"] = forest_checked
    return report.finish(started)


# -- aaa: dense non-bipartite graphs are weakly pancyclic with girth 3 or 4 ---


def _pancyclic_problem(g: Graph) -> Optional[str]:
    spectrum = find_cycles(g, range(3, g.n + 1))
    lo, hi = min(spectrum), max(spectrum)
    if lo > 4:
        return f"girth {lo}"
    missing = [L for L in range(lo, hi + 1) if L not in spectrum]
    if missing:
        return f"missing cycle lengths {missing} between girth {lo} and circumference {hi}"
    return None


def _dense_nonbipartite(g: Graph) -> bool:
    return 3 * g.min_degree() >= g.n + 2 and not is_bipartite(g)


def verify_aaa(
    n_values: Iterable[int] = (3, 4, 5, 6, 7),
    mode: str = "up_to_iso",
    sample: Optional[int] = None,
    seed: int = 0,
) -> VerificationReport:
    """Non-bipartite graphs with 3*delta >= n+2: weakly pancyclic, girth 3 or 4."""
    started = time.perf_counter()
    n_values = list(n_values)
    if sample is not None:
        report = VerificationReport("aaa", {"n": n_values, "samples": sample}, SAMPLED, seed=seed)
        rng = random.Random(seed)
        for n in n_values:
            pairs = list(combinations(range(n), 2))
            for _ in range(sample):
                mask = rng.getrandbits(len(pairs))
                rows = [0] * n
                for i in bits(mask):
                    u, v = pairs[i]
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                g = Graph(n, tuple(rows))
                if not _dense_nonbipartite(g):
                    continue
                report.checked += 1
                problem = _pancyclic_problem(g)
                if problem:
                    report.add(to_graph6(g), problem)
        return report.finish(started)
    report = VerificationReport("aaa", {"n": n_values, "enumeration": mode}, EXHAUSTIVE)
    for n in n_values:
        for g in enumerate_graphs(n, _dense_nonbipartite, mode=mode):
            report.checked += 1
            problem = _pancyclic_problem(g)
            if problem:
                report.add(to_graph6(g), problem)
    return report.finish(started)


# -- l1: common neighbours, instance form ---------------------------------------------------------


def verify_l1(k: int = 2, r: int = 3, n_values: Iterable[int] = (6, 7, 8)) -> VerificationReport:
    """Every C_{2k+1}-free graph meeting the edge threshold, every (r+2)-set S:
    some pair of S has at least n/(2(r+2)(r+1)) common neighbours."""
    started = time.perf_counter()
    n_values = list(n_values)
    report = VerificationReport("l1", {"k": k, "r": r, "n": n_values}, EXHAUSTIVE)
    second = 0
    graphs = 0
    for n in n_values:
        need = edge_threshold(n, r)
        for g in enumerate_graphs(n, lambda g: g.m >= need, hereditary=c2k1_free(k)):
            graphs += 1
            for S in combinations(range(n), r + 2):
                res = check_common_neighbourhood(g, S, k, r)
                report.checked += 1
                second += res.second_inequality
                if not res.holds:
                    report.add(to_graph6(g), f"S={list(S)}: best pair {list(res.best_pair)} has {res.best_common} common neighbours")
    report.notes["graphs"] = graphs
    report.notes["second_inequality_holds"] = second
    report.notes["n_hypothesis_from"] = large_n_bound(k, r)
    return report.finish(started)


def verify_lemma(lemma: str, **params) -> VerificationReport:
    dispatch = {
        "www": verify_www,
        "degree": verify_degree,
        "outside": verify_outside,
        "gchords": verify_gchords,
        "aaa": verify_aaa,
        "l1": verify_l1,
    }
    if lemma not in dispatch:
        raise ValueError(f"unknown lemma id {lemma!r}; expected one of {', '.join(LEMMA_IDS)}")
    return dispatch[lemma](**params)
