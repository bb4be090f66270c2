"""Odd-cycle structure of C_{2k+1}-free graphs: cycle search, starters,
bipartization distances, extremal constructions and lemma verification."""

from .bipartization import BipartizationResult, d2, gamma2, max_cut
from .budget import Budget, BudgetExceeded
from .canon import canonical_form, is_isomorphic
from .constructions import (
    ConstructionSpec,
    complete_bipartite,
    conj_gamma2_bound,
    conj_threshold,
    edge_threshold,
    gamma2_bound,
    t_star,
    t_star_star,
    turan,
)
from .cycles import (
    Chord,
    Cycle,
    chords,
    cycle_spectrum,
    find_cycles,
    girth,
    is_c2k1_free,
    is_weakly_pancyclic,
    longest_odd_cycle,
    odd_girth,
    shortest_r_admissible,
)
from .enumeration import enumerate_graphs
from .graph import Graph, GraphFormatError, bipartition, build, from_graph6, to_graph6
from .instances import check_main_theorem_instance, check_stability_instance
from .lemmas import verify_lemma
from .peel import PeelTrace, min_degree_peel
from .reports import VerificationReport
from .search import search_counterexample, verify_turan_extremal
from .starters import StarterCertificate, find_starter, is_starter

__version__ = "0.1.0"
