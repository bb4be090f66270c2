from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given

from oddcycles.budget import BudgetExceeded
from oddcycles.constructions import complete_bipartite, t_star
from oddcycles.cycles import (
    Chord,
    Cycle,
    Relation,
    auxiliary_forest,
    chord_relation,
    chords,
    circumference,
    cycle_spectrum,
    find_cycles,
    girth,
    is_c2k1_free,
    is_weakly_pancyclic,
    longest_odd_cycle,
    maximum_chords,
    odd_chord_cycle,
    odd_girth,
    shortest_r_admissible,
)
from oddcycles.graph import bipartition, build, complete, cycle_graph, petersen
from strategies import graphs


def brute_spectrum(g):
    """Lengths L with some L-subset carrying a Hamiltonian cycle (permutation search)."""
    found = set()
    for L in range(3, g.n + 1):
        for subset in combinations(range(g.n), L):
            first, rest = subset[0], subset[1:]
            if any(
                all(g.has_edge(a, b) for a, b in zip((first,) + p, p + (first,)))
                for p in permutations(rest)
                if p[0] < p[-1]
            ):
                found.add(L)
                break
    return found


def spectral_odd_girth(g):
    a = np.array([[g.has_edge(u, v) for v in range(g.n)] for u in range(g.n)], dtype=np.int64)
    power = a.copy()
    for t in range(1, g.n + 1):
        if t % 2 and np.trace(power) > 0:
            return t
        power = np.minimum(power @ a, 1)
    return None


def test_spectrum_examples():
    assert set(cycle_spectrum(complete(4))) == {3, 4}
    assert set(cycle_spectrum(cycle_graph(7))) == {7}
    assert set(cycle_spectrum(petersen())) == {5, 6, 8, 9}


def test_witnesses_are_normalized_cycles():
    for L, c in cycle_spectrum(petersen()).items():
        assert len(c) == L
        assert c.is_valid_in(petersen())
        assert c == c.normalized()
        assert c.vertices[1] < c.vertices[-1]


@given(graphs(max_n=7))
def test_spectrum_matches_permutation_oracle(g):
    assert set(cycle_spectrum(g)) == brute_spectrum(g)


@given(graphs(max_n=9))
def test_block_split_agrees_with_direct_search(g):
    lengths = range(3, g.n + 1)
    assert set(find_cycles(g, lengths, by_block=True)) == set(find_cycles(g, lengths, by_block=False))


@given(graphs(max_n=8))
def test_odd_girth_matches_matrix_powers(g):
    og = odd_girth(g)
    assert og == spectral_odd_girth(g)
    assert (og is None) == (bipartition(g) is not None)
    if og is not None:
        longest = longest_odd_cycle(g)
        assert og % 2 == 1 and len(longest) % 2 == 1
        assert og <= len(longest)


@given(graphs(max_n=8))
def test_bipartite_spectrum_is_even(g):
    if bipartition(g) is not None:
        assert all(L % 2 == 0 for L in cycle_spectrum(g))


def test_longest_and_odd_girth_examples():
    assert len(longest_odd_cycle(complete(5))) == 5
    assert len(longest_odd_cycle(t_star(3, 10))) == 3
    assert odd_girth(complete_bipartite(3, 3)) is None
    assert longest_odd_cycle(complete_bipartite(3, 3)) is None


def test_girth_and_circumference():
    assert girth(petersen()) == 5
    assert circumference(petersen()) == 9
    assert girth(complete_bipartite(2, 2)) == 4
    assert girth(build(4, [(0, 1), (1, 2)])) is None


def test_c2k1_free_and_admissible():
    assert not is_c2k1_free(cycle_graph(5), 2)
    assert is_c2k1_free(cycle_graph(7), 2)
    c = shortest_r_admissible(cycle_graph(7), 3)
    assert c.same_as(Cycle(tuple(range(7))))
    assert shortest_r_admissible(t_star(5, 14), 5) is None
    assert len(shortest_r_admissible(complete(6), 3)) == 5


def test_weak_pancyclicity():
    assert is_weakly_pancyclic(complete(4))
    assert is_weakly_pancyclic(cycle_graph(7))
    # triangle 0-1-2 and pentagon 5..9 joined by the path 2-3-4-5
    edges = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]
    edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    g = build(10, edges)
    assert set(cycle_spectrum(g)) == {3, 5}
    assert not is_weakly_pancyclic(g)
    with pytest.raises(ValueError):
        is_weakly_pancyclic(build(3, [(0, 1)]))


def test_budget_is_explicit():
    with pytest.raises(BudgetExceeded):
        cycle_spectrum(petersen(), budget=10)


def c7_with(*extra):
    return build(7, [(i, (i + 1) % 7) for i in range(7)] + list(extra))


HOST7 = Cycle(tuple(range(7)))


def test_chord_listing():
    k5 = complete(5)
    assert len(chords(k5, Cycle((0, 1, 2, 3, 4)))) == 5
    assert chords(cycle_graph(7), HOST7) == []
    only = chords(c7_with((0, 3)), HOST7)
    assert [ch.endpoints for ch in only] == [(0, 3)]


def test_odd_chord_cycles():
    assert odd_chord_cycle(Chord(HOST7, 0, 3)).vertices == (0, 3, 4, 5, 6)
    assert odd_chord_cycle(Chord(HOST7, 0, 5)).vertices == (0, 5, 6)
    host9 = Cycle(tuple(range(9)))
    assert odd_chord_cycle(Chord(host9, 1, 4)).vertices == (1, 4, 5, 6, 7, 8, 0)


def test_chord_validation():
    with pytest.raises(ValueError):
        Chord(HOST7, 0, 1)
    with pytest.raises(ValueError):
        Chord(HOST7, 0, 6)
    with pytest.raises(ValueError):
        Chord(HOST7, 2, 9)


def test_maximum_chord_and_relations():
    g = c7_with((0, 3), (0, 5))
    assert [ch.endpoints for ch in maximum_chords(g, HOST7)] == [(0, 3)]
    assert chord_relation(Chord(HOST7, 0, 5), Chord(HOST7, 1, 4)) is Relation.PRECEDES
    assert chord_relation(Chord(HOST7, 1, 4), Chord(HOST7, 0, 5)) is Relation.SUCCEEDS
    assert chord_relation(Chord(HOST7, 0, 3), Chord(HOST7, 1, 5)) is Relation.CROSSES
    assert chord_relation(Chord(HOST7, 0, 3), Chord(HOST7, 0, 5)) is Relation.SHARES_ENDPOINT
    with pytest.raises(ValueError):
        chord_relation(Chord(HOST7, 0, 3), Chord(HOST7, 0, 3))


@pytest.mark.parametrize("L", [5, 7, 9])
def test_relations_on_every_chord_pair(L):
    host = Cycle(tuple(range(L)))
    all_chords = [Chord(host, i, j) for i, j in combinations(range(L), 2) if host.distance(i, j) >= 2]
    for a, b in combinations(all_chords, 2):
        rel = chord_relation(a, b)
        cyc = odd_chord_cycle(a)
        assert len(cyc) % 2 == 1 and len(cyc) < L
        if rel in (Relation.PRECEDES, Relation.SUCCEEDS):
            ends = sorted(set(a.endpoints) | set(b.endpoints))
            (p, q), (s, t) = (a.i, a.j), (b.i, b.j)
            assert len(ends) < 4 or (p < s < q) == (p < t < q)


def test_auxiliary_forest_examples():
    host = Cycle(tuple(range(9)))
    one = auxiliary_forest(host, [Chord(host, 0, 2)], 2)
    assert one.graph.m == 1 and one.is_forest and one.tree_count >= 2
    path = auxiliary_forest(host, [Chord(host, 0, 2), Chord(host, 2, 4)], 2)
    assert path.is_forest
    tri = auxiliary_forest(host, [Chord(host, 0, 2), Chord(host, 2, 4), Chord(host, 0, 4)], 2)
    assert not tri.is_forest
    with pytest.raises(ValueError):
        auxiliary_forest(host, [Chord(host, 0, 7)], 2)
