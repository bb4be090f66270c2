from itertools import combinations

import pytest
from hypothesis import given

from oddcycles.budget import BudgetExceeded
from oddcycles.constructions import complete_bipartite
from oddcycles.graph import bipartition, complete, cycle_graph, petersen
from oddcycles.starters import find_starter, is_starter, odd_path_lengths, path_lengths
from strategies import graphs


def all_path_lengths(g, u, v):
    """Lengths of every simple u-v path, by plain recursive search."""
    out = set()

    def walk(x, seen, length):
        if x == v:
            out.add(length)
            return
        for y in g.neighbors(x):
            if y not in seen:
                walk(y, seen | {y}, length + 1)

    walk(u, {u}, 0)
    return out


def test_odd_path_length_examples():
    assert set(odd_path_lengths(cycle_graph(5), 0, 1, 5)) == {1}
    for u, v in combinations(range(4), 2):
        assert set(odd_path_lengths(complete(4), u, v, 3)) == {1, 3}
    assert set(odd_path_lengths(complete_bipartite(3, 3), 0, 3, 5)) == {1, 3, 5}


def test_odd_path_lengths_reject_bad_input():
    with pytest.raises(ValueError):
        odd_path_lengths(complete(3), 0, 1, 0)
    with pytest.raises(ValueError):
        odd_path_lengths(complete(3), 1, 1, 3)


@given(graphs(min_n=2, max_n=8))
def test_path_lengths_match_recursive_oracle(g):
    expected = all_path_lengths(g, 0, g.n - 1)
    found = path_lengths(g, 0, g.n - 1, range(1, g.n))
    assert set(found) == expected
    for length, path in found.items():
        assert len(path) == length + 1
        assert len(set(path)) == len(path)
        assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def test_path_search_budget():
    with pytest.raises(BudgetExceeded):
        path_lengths(complete(12), 0, 11, [11], budget=5)


def test_is_starter_examples():
    cert = is_starter(complete(5), range(5), 1, 2)
    assert cert is not None and cert.validate(complete(5))
    assert cert.r == 3
    assert is_starter(complete_bipartite(3, 3), [0, 1, 2], 1, 2) is None


def test_petersen_starters_match_pairwise_oracle():
    g = petersen()
    for S in [(0, 1, 2, 3, 4), (0, 2, 4, 6, 8), (0, 1, 5, 6, 7), (5, 6, 7, 8, 9)]:
        expected = all(all_path_lengths(g, a, b) & {3, 5} for a, b in combinations(S, 2))
        cert = is_starter(g, S, 2, 3)
        assert (cert is not None) == expected
        if cert:
            assert cert.validate(g)


def test_find_starter_on_cliques():
    cert = find_starter(complete(7), 3, 1, 2)
    assert cert.vertices == (0, 1, 2, 3, 4)
    assert cert.validate(complete(7))
    js = cert.to_json()
    assert js["set"] == [0, 1, 2, 3, 4] and len(js["witnesses"]) == 10


@given(graphs(min_n=3, max_n=8))
def test_bipartite_graphs_have_no_starters(g):
    if bipartition(g) is not None:
        for r in (1, 2, 3):
            assert find_starter(g, r, 1, 3) is None


@given(graphs(min_n=3, max_n=7))
def test_certificates_validate_and_are_monotone(g):
    cert = find_starter(g, 1, 2, 2)
    if cert is None:
        return
    assert cert.validate(g)
    assert is_starter(g, cert.vertices, 1, 2) is not None
    assert is_starter(g, cert.vertices, 1, 3) is not None


def test_find_starter_is_lexicographically_first():
    g = cycle_graph(5)
    cert = find_starter(g, 1, 1, 2)
    # every triple of C5 works with lengths 1 or 3; the first is (0, 1, 2)
    assert cert.vertices == (0, 1, 2)
