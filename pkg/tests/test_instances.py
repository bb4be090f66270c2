import pytest

from oddcycles.constructions import complete_bipartite, t_star
from oddcycles.graph import build, complete, from_graph6
from oddcycles.instances import (
    Outcome,
    check_common_neighbourhood,
    check_main_theorem_instance,
    check_stability_instance,
    large_n_bound,
)


def test_main_theorem_examples():
    assert check_main_theorem_instance(t_star(3, 10), 2, 3).outcome is Outcome.CONCLUSION_HOLDS
    assert check_main_theorem_instance(complete_bipartite(5, 5), 2, 3).outcome is Outcome.CONCLUSION_HOLDS
    assert check_main_theorem_instance(complete(6), 2, 3).outcome is Outcome.HYPOTHESIS_UNMET


def test_small_n_violation_carries_witness():
    # 7 vertices, C5-free, above the edge threshold, yet Hamiltonian: allowed
    # because n is far below the range where the theorem applies
    g = from_graph6("FWD[o")
    res = check_main_theorem_instance(g, 2, 3)
    assert res.outcome is Outcome.VIOLATION
    assert res.witness.is_valid_in(g) and len(res.witness) == 7
    assert g.n < large_n_bound(2, 3)


def test_pendant_vertex_misses_the_edge_hypothesis():
    g = build(8, [(i, (i + 1) % 7) for i in range(7)] + [(0, 7)])
    assert check_main_theorem_instance(g, 2, 3).outcome is Outcome.HYPOTHESIS_UNMET


def test_parameter_checks():
    with pytest.raises(ValueError):
        check_main_theorem_instance(complete(4), 1, 3)
    with pytest.raises(ValueError):
        check_stability_instance(complete(4), 2, 5)


def test_stability_at_t_star():
    res = check_stability_instance(t_star(4, 12), 2, 4)
    assert res.hypothesis_met
    assert (res.d2, res.gamma2) == (2, 2)
    assert res.is_t_star and res.equality and res.consistent


def test_stability_on_bipartite_and_perturbed():
    res = check_stability_instance(complete_bipartite(6, 6), 2, 4)
    assert (res.d2, res.gamma2) == (0, 0)
    assert res.d2_holds and res.gamma2_holds and not res.equality
    g = t_star(4, 12).remove_edges([(1, 5)])
    res = check_stability_instance(g, 2, 4)
    assert res.d2_holds and res.gamma2_holds
    assert res.is_t_star is False
    assert res.to_json()["is_t_star"] is False


def test_common_neighbourhood():
    g = t_star(3, 10)
    res = check_common_neighbourhood(g, [0, 1, 2, 3, 4], 2, 3)
    assert res.holds
    assert res.best_common == g.common_neighbors(*res.best_pair)
    assert not res.second_inequality
    with pytest.raises(ValueError):
        check_common_neighbourhood(g, [0, 1], 2, 3)
    assert large_n_bound(2, 3) == 2 * 5 * 4 * 7
