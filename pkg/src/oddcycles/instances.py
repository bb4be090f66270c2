"""Per-graph predicates for the main theorem, its stability form and the
common-neighbourhood bound.

At desk-scale n none of the large-n hypotheses hold; these predicates
report what happens on a given graph and never treat a small-n failure
as a contradiction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional

from .bipartization import d2, gamma2
from .budget import Budget, as_budget
from .canon import is_isomorphic
from .constructions import edge_threshold, gamma2_bound, t_star
from .cycles import Cycle, is_c2k1_free, shortest_r_admissible
from .graph import Graph


def _check_kr(k: int, r: int) -> None:
    if k < 2 or not 3 <= r <= 2 * k:
        raise ValueError(f"need k >= 2 and 3 <= r <= 2k, got k={k}, r={r}")


def large_n_bound(k: int, r: int) -> int:
    """Smallest n covered by the theorems: 2(r+2)(r+1)(r+2k)."""
    return 2 * (r + 2) * (r + 1) * (r + 2 * k)


class Outcome(str, Enum):
    HYPOTHESIS_UNMET = "hypothesis_unmet"
    CONCLUSION_HOLDS = "conclusion_holds"
    VIOLATION = "violation"


@dataclass(frozen=True)
class MainCheck:
    outcome: Outcome
    witness: Optional[Cycle] = None
    reason: str = ""


def check_main_theorem_instance(g: Graph, k: int, r: int, budget: Budget | int | None = None) -> MainCheck:
    """Edge hypothesis and C_{2k+1}-freeness, then: no odd cycle longer than r."""
    _check_kr(k, r)
    budget = as_budget(budget)
    need = edge_threshold(g.n, r)
    if g.m < need:
        return MainCheck(Outcome.HYPOTHESIS_UNMET, reason=f"e(G)={g.m} < {need}")
    if not is_c2k1_free(g, k, budget):
        return MainCheck(Outcome.HYPOTHESIS_UNMET, reason=f"contains C_{2 * k + 1}")
    witness = shortest_r_admissible(g, r, budget)
    if witness is None:
        return MainCheck(Outcome.CONCLUSION_HOLDS)
    return MainCheck(Outcome.VIOLATION, witness, f"odd cycle of length {len(witness)} > r={r}")


@dataclass(frozen=True)
class StabilityCheck:
    hypothesis_met: bool
    d2: int
    d2_bound: int
    gamma2: int
    gamma2_bound: int
    is_t_star: Optional[bool]  # None when n is outside t_star's range

    @property
    def d2_holds(self) -> bool:
        return self.d2 <= self.d2_bound

    @property
    def gamma2_holds(self) -> bool:
        return self.gamma2 <= self.gamma2_bound

    @property
    def equality(self) -> bool:
        return self.d2 == self.d2_bound and self.gamma2 == self.gamma2_bound

    @property
    def consistent(self) -> bool:
        """Bounds hold and equality occurs exactly at t_star (only meaningful under the hypothesis)."""
        return self.d2_holds and self.gamma2_holds and self.equality == bool(self.is_t_star)

    def to_json(self) -> dict:
        return {
            "hypothesis_met": self.hypothesis_met,
            "d2": self.d2,
            "d2_bound": self.d2_bound,
            "gamma2": self.gamma2,
            "gamma2_bound": self.gamma2_bound,
            "equality": self.equality,
            "is_t_star": self.is_t_star,
        }


def check_stability_instance(g: Graph, k: int, r: int, budget: Budget | int | None = None) -> StabilityCheck:
    _check_kr(k, r)
    budget = as_budget(budget)
    met = g.m >= edge_threshold(g.n, r) and is_c2k1_free(g, k, budget)
    iso = is_isomorphic(g, t_star(r, g.n)) if g.n >= r + 3 else None
    return StabilityCheck(
        hypothesis_met=met,
        d2=d2(g, budget).size,
        d2_bound=r - 2,
        gamma2=gamma2(g, budget).size,
        gamma2_bound=gamma2_bound(r),
        is_t_star=iso,
    )


@dataclass(frozen=True)
class CommonNeighbourCheck:
    holds: bool  # some pair has |N(u) & N(v)| >= n / (2(r+2)(r+1))
    best_pair: tuple[int, int]
    best_common: int
    second_inequality: bool  # n / (2(r+2)(r+1)) >= r + 2k


def check_common_neighbourhood(g: Graph, S: Iterable[int], k: int, r: int) -> CommonNeighbourCheck:
    S = sorted(set(S))
    if len(S) != r + 2:
        raise ValueError(f"S must have r+2={r + 2} vertices")
    scale = 2 * (r + 2) * (r + 1)
    pair = max(combinations(S, 2), key=lambda p: (g.common_neighbors(*p), -p[0], -p[1]))
    common = g.common_neighbors(*pair)
    return CommonNeighbourCheck(
        holds=scale * common >= g.n,
        best_pair=pair,
        best_common=common,
        second_inequality=g.n >= scale * (r + 2 * k),
    )
