"""Acceptance checks. Each test prints one PASS/FAIL line with its timing.

Run with ``pytest tests/test_acceptance.py -v`` (lines are printed even
without ``-s``).
"""

import random
import subprocess
import sys
import time
from math import comb

import pytest

from oddcycles.bipartization import d2, d2_bruteforce, gamma2, max_cut_bruteforce
from oddcycles.canon import canonical_form
from oddcycles.constructions import (
    complete_bipartite,
    conj_gamma2_bound,
    conj_threshold,
    gamma2_bound,
    t_star,
    t_star_star,
)
from oddcycles.cycles import longest_odd_cycle
from oddcycles.enumeration import iso_graphs
from oddcycles.graph import build, from_graph6
from oddcycles.lemmas import verify_degree, verify_outside, verify_www
from oddcycles.peel import min_degree_peel, peel_invariant_failures
from oddcycles.search import verify_turan_extremal


@pytest.fixture
def report_line(capsys):
    def emit(number, ok, what, started, limit=None):
        took = time.perf_counter() - started
        within = limit is None or took < limit
        status = "PASS" if ok and within else "FAIL"
        bound = f" (limit {limit:g}s)" if limit else ""
        with capsys.disabled():
            print(f"\n[{status}] criterion {number}: {what} in {took:.2f}s{bound}")
        return ok and within

    return emit


def test_c01_t_star_edge_identity(report_line):
    t0 = time.perf_counter()
    bad = [
        (r, n)
        for r in range(3, 9)
        for n in range(r + 3, 41)
        if t_star(r, n).m != (n - r + 1) ** 2 // 4 + comb(r, 2)
    ]
    assert report_line(1, not bad, f"e(T*(r,n)) identity, 3<=r<=8, n<=40, mismatches={bad}", t0, 1)


def test_c02_t_star_longest_odd_cycle(report_line):
    t0 = time.perf_counter()
    bad = []
    for r in range(3, 7):
        for n in range(r + 3, 15):
            want = r if r % 2 else r - 1
            got = len(longest_odd_cycle(t_star(r, n)))
            if got != want:
                bad.append((r, n, got))
    assert report_line(2, not bad, f"longest odd cycle of T*, r<=6, n<=14, mismatches={bad}", t0, 10)


def test_c03_stability_equalities(report_line):
    t0 = time.perf_counter()
    bad = []
    for r in range(3, 7):
        for n in range(r + 3, 17):
            g = t_star(r, n)
            if d2(g).size != r - 2 or gamma2(g).size != gamma2_bound(r):
                bad.append((r, n))
    assert report_line(3, not bad, f"d2 = r-2 and gamma2 = split bound at T*, r<=6, n<=16, mismatches={bad}", t0, 30)


@pytest.mark.xfail(
    strict=True,
    reason="max edges is 9 / 12 as claimed, but the extremal graph is not unique at n=6,7 "
    "(K_2 joined to 4 independent vertices, K_3 and K_4 sharing a vertex, two K_4 sharing a vertex)",
)
def test_c04_c5_free_extremal_graphs(report_line):
    t0 = time.perf_counter()
    results = {n: verify_turan_extremal(n, 2, "up_to_iso") for n in (6, 7)}
    values = {n: rep.notes["max_edges"] for n, rep in results.items()}
    classes = {n: rep.notes["extremal_classes"] for n, rep in results.items()}
    values_ok = values == {6: 9, 7: 12}
    unique_ok = all(rep.ok for rep in results.values())
    targets = {6: complete_bipartite(3, 3), 7: complete_bipartite(3, 4)}
    assert values_ok, values
    # the balanced complete bipartite graph is always among the extremal classes
    for n, rep in results.items():
        others = {canonical_form(from_graph6(v.graph6)) for v in rep.violations}
        assert len(others) == classes[n] - 1
        assert canonical_form(targets[n]) not in others
    assert report_line(
        4,
        values_ok and unique_ok,
        f"C5-free max edges {values} (expected 9, 12), extremal classes {classes} (expected 1, 1)",
        t0,
        120,
    )


def test_c05_degree_lemma_exhaustive(report_line):
    t0 = time.perf_counter()
    small = verify_degree(2)
    large = verify_degree(3)
    ok = (
        small.ok
        and large.ok
        and small.checked == 512
        and large.checked == (1 << 14) * 99
        and large.mode == "exhaustive"
    )
    assert report_line(
        5,
        ok,
        f"shorter odd cycle through an outside vertex: C5 {small.checked} configs, "
        f"C7 {large.checked} configs ({large.mode}), violations {len(small.violations) + len(large.violations)}",
        t0,
        600,
    )


def test_c06_outside_degree_lemma(report_line):
    t0 = time.perf_counter()
    rep = verify_www(2, 3)
    ok = rep.ok and rep.complete and rep.checked > 0
    assert report_line(
        6,
        ok,
        f"outside vertex sees <= 3 vertices of a C5-free C7 host: "
        f"{rep.notes['chord_sets_meeting_hypothesis']} chord sets, {rep.checked} configs, "
        f"violations {len(rep.violations)}",
        t0,
        300,
    )


def test_c07_two_outside_vertices(report_line):
    t0 = time.perf_counter()
    rep = verify_outside(3)
    ok = rep.ok and rep.complete and rep.checked > 0
    assert report_line(
        7,
        ok,
        f"short odd x-y path, C7 host, no C5: {rep.checked} configs meeting the hypothesis "
        f"out of {rep.space}, violations {len(rep.violations)}",
        t0,
        600,
    )


def test_c08_oracle_equivalence(report_line):
    t0 = time.perf_counter()
    rng = random.Random(8)
    disagreements = 0
    for _ in range(10_000):
        n = rng.randint(1, 8)
        p = rng.random()
        g = build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if gamma2(g).size != g.m - max_cut_bruteforce(g) or d2(g).size != d2_bruteforce(g):
            disagreements += 1
    assert report_line(8, disagreements == 0, f"d2/gamma2 vs naive oracles on 10^4 graphs, disagreements {disagreements}", t0)


def test_c09_t_star_star_family(report_line):
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for k in (2, 3):
        for b in range(3, 2 * k + 1):
            for n in range(2 * k + b, 25):
                g = t_star_star(k, b, n)
                checked += 1
                if g.m != conj_threshold(n, k, b) or gamma2(g).size != conj_gamma2_bound(k, b):
                    bad.append((k, b, n))
    assert report_line(9, not bad, f"T** edges and gamma2 formulas, {checked} graphs, mismatches={bad}", t0, 120)


def test_c10_peel_contract(report_line):
    t0 = time.perf_counter()
    failures = 0
    graphs = 0
    for n in range(1, 9):
        for g in iso_graphs(n):
            graphs += 1
            for r in (3, 4, 5, 6):
                failures += len(peel_invariant_failures(g, min_degree_peel(g, r)))
    assert report_line(10, failures == 0, f"peel invariants on {graphs} graphs (n<=8), r=3..6, failures {failures}", t0)


COMMANDS = [
    ["verify", "--lemma", "degree", "--host-length", "7", "--sample", "200", "--seed", "3"],
    ["verify", "--lemma", "outside", "--host-length", "9", "--sample", "100", "--seed", "3"],
    ["verify", "--lemma", "aaa", "--n-range", "5-6", "--sample", "300", "--seed", "3"],
    ["search", "--target", "theorem6", "--n-range", "5-7", "--r", "3"],
    ["search", "--target", "conjecture1", "--n-range", "7-14", "--b", "3", "--family", "t_star_star"],
]


def test_c11_determinism(report_line):
    t0 = time.perf_counter()
    mismatched = []
    for argv in COMMANDS:
        runs = [
            subprocess.run([sys.executable, "-m", "oddcycles.cli", *argv], capture_output=True, check=False).stdout
            for _ in range(2)
        ]
        if runs[0] != runs[1] or not runs[0]:
            mismatched.append(" ".join(argv[:3]))
    assert report_line(11, not mismatched, f"byte-identical reruns of {len(COMMANDS)} commands, mismatched={mismatched}", t0)
