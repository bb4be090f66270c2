"""Minimum-degree peeling: delete vertices of degree below 2(n-i)/(5r)."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, induced_subgraph


@dataclass(frozen=True)
class PeelStep:
    step: int
    vertex: int  # original label
    degree: int
    threshold_num: int  # threshold is threshold_num / threshold_den
    threshold_den: int

    def to_json(self) -> dict:
        return {
            "step": self.step,
            "vertex": self.vertex,
            "degree": self.degree,
            "threshold": [self.threshold_num, self.threshold_den],
        }


@dataclass(frozen=True)
class PeelTrace:
    n: int
    r: int
    deleted: tuple[PeelStep, ...]
    core: Graph
    core_vertices: tuple[int, ...]  # original labels of core vertices, in core order

    @property
    def deleted_vertices(self) -> list[int]:
        return [s.vertex for s in self.deleted]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "deleted": [s.to_json() for s in self.deleted],
            "core_vertices": list(self.core_vertices),
        }


def min_degree_peel(g: Graph, r: int) -> PeelTrace:
    """Repeatedly delete the minimum-degree vertex (lowest index on ties) while
    its degree is below 2(n-i)/(5r) at step i."""
    if r < 3:
        raise ValueError("peeling needs r >= 3")
    n = g.n
    alive = g.all_mask
    steps = []
    i = 0
    while alive:
        deg, v = min(((g.adj[u] & alive).bit_count(), u) for u in bits(alive))
        # deg < 2(n-i)/(5r), cross-multiplied
        if 5 * r * deg >= 2 * (n - i):
            break
        steps.append(PeelStep(i, v, deg, 2 * (n - i), 5 * r))
        alive &= ~(1 << v)
        i += 1
    core, index = induced_subgraph(g, alive)
    return PeelTrace(n, r, tuple(steps), core, tuple(sorted(index, key=index.get)))


def peel_invariant_failures(g: Graph, trace: PeelTrace) -> list[str]:
    """Replay a trace against g; return a description of every broken invariant."""
    problems = []
    r, n = trace.r, g.n
    alive = g.all_mask
    for i, step in enumerate(trace.deleted):
        if step.step != i:
            problems.append(f"step {i} recorded as {step.step}")
        if not alive >> step.vertex & 1:
            problems.append(f"vertex {step.vertex} deleted twice")
            continue
        deg = (g.adj[step.vertex] & alive).bit_count()
        if deg != step.degree:
            problems.append(f"step {i}: recorded degree {step.degree}, actual {deg}")
        if not 5 * r * deg < 2 * (n - i):
            problems.append(f"step {i}: degree {deg} not below 2({n}-{i})/(5*{r})")
        alive &= ~(1 << step.vertex)
    if set(trace.core_vertices) != set(bits(alive)):
        problems.append("core vertex set does not match the replay")
    core_deg = min(((g.adj[u] & alive).bit_count() for u in bits(alive)), default=None)
    final = n - len(trace.deleted)
    if core_deg is not None and 5 * r * core_deg < 2 * final:
        problems.append(f"core minimum degree {core_deg} below 2({final})/(5*{r})")
    return problems
