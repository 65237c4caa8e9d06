"""Contraction-based coloring under degree and independence assumptions.

color_by_contraction colors a graph assumed to be minor-free using at most
delta - alpha + 2 colors, where delta bounds the minimum degree of every
graph in the class and alpha is the guaranteed independent-set size of
delta-vertex neighborhood graphs.  The recursion:

1. n = 1: color 0.
2. Take a minimum-degree vertex v (degree d; d > delta is a premise
   violation and raises MinDegreeExceeded).
3. d = 0: solve without v, then give v the color of the smallest-id
   colored vertex (color 0 if none).
4. Otherwise find a maximum independent set T inside the neighborhood
   graph of v (|T| < alpha - delta + d raises IndependenceShortfall),
   merge {v} union T into one vertex z, and solve the merged graph.
5. Lift: T gets z's color, other survivors keep theirs, and v takes the
   least palette color absent from its neighborhood, which exists
   because at most delta - alpha + 1 colors can appear there.

The recursion is driven iteratively over an explicit frame stack so that
instance-size-deep recursions never touch the interpreter limit, and
every run produces a step-by-step trace that can be replayed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    IndependenceShortfall,
    MinDegreeExceeded,
    MinorAuditFailed,
    PaletteExhausted,
)
from .graph import (
    Coloring,
    Graph,
    contract_set,
    induced_subgraph,
    is_independent_set,
    is_proper_coloring,
    min_degree_vertex,
    without_vertex,
)
from .indep import max_independent_set
from .minor import has_clique_minor


@dataclass(frozen=True)
class TraceStep:
    vertex: int
    degree: int
    independent_set: frozenset[int]
    merged_vertex: int | None  # None when the step removed an isolated vertex
    color: int


@dataclass
class ContractionTrace:
    steps: list[TraceStep] = field(default_factory=list)
    base_size: int = 0


@dataclass
class ColorReport:
    coloring: Coloring
    colors_used: int
    palette_bound: int
    delta_used: int
    alpha_used: int
    proper: bool
    trace: ContractionTrace


def palette_bound(delta: int, alpha: int) -> int:
    """delta - alpha + 2, the palette size the recursion is entitled to."""
    if delta < alpha - 1:
        raise ValueError(f"delta={delta} must be at least alpha-1={alpha - 1}")
    return delta - alpha + 2


def color_by_contraction(
    g: Graph,
    t: int,
    delta: int,
    alpha: int,
    *,
    audit: bool = False,
    oracle_cap: int | None = None,
    mis_cap: int | None = None,
) -> ColorReport:
    """Color g with at most delta - alpha + 2 colors.

    The caller asserts g has no complete minor of order t+1; with
    audit=True every neighborhood graph is checked for an order-t minor
    and a violation raises MinorAuditFailed.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    if delta < 1 or alpha < 1:
        raise ValueError("delta and alpha must be >= 1")
    palette = palette_bound(delta, alpha)
    if palette < 2:
        raise ValueError("palette bound delta - alpha + 2 must be >= 2")

    # Descent: peel one vertex per step, remembering what the lift needs.
    pending: list[tuple[int, int, frozenset[int], int | None, tuple[int, ...]]] = []
    cur = g
    while cur.n > 1:
        v, d = min_degree_vertex(cur)
        if d > delta:
            raise MinDegreeExceeded(v, d, cur)
        if d == 0:
            pending.append((v, 0, frozenset(), None, ()))
            cur = without_vertex(cur, v)
            continue
        nbrs = cur.neighbors(v)
        neighborhood = induced_subgraph(cur, nbrs)
        if audit:
            model = has_clique_minor(neighborhood, t, cap=oracle_cap)
            if model is not None:
                raise MinorAuditFailed(model, neighborhood)
        chosen = max_independent_set(neighborhood, cap=mis_cap)
        required = alpha - (delta - d)
        if len(chosen) < required:
            raise IndependenceShortfall(neighborhood, len(chosen), required)
        merged, z = contract_set(cur, chosen | {v})
        pending.append((v, d, chosen, z, nbrs))
        cur = merged

    assignment: dict[int, int] = {v: 0 for v in cur.vertices}
    base_size = cur.n

    # Lift in reverse order of the descent.
    steps_reversed: list[TraceStep] = []
    for v, d, chosen, z, nbrs in reversed(pending):
        if d == 0:
            color = assignment[min(assignment)] if assignment else 0
        else:
            merged_color = assignment[z]
            for u in chosen:
                assignment[u] = merged_color
            used = {assignment[u] for u in nbrs}
            assert len(used) <= delta - alpha + 1, "neighborhood color crowding"
            color = next((c for c in range(palette) if c not in used), None)
            if color is None:
                raise PaletteExhausted(
                    f"all {palette} colors appear on the neighborhood of {v}"
                )
        assignment[v] = color
        steps_reversed.append(TraceStep(v, d, chosen, z, color))

    trace = ContractionTrace(steps=list(reversed(steps_reversed)), base_size=base_size)
    coloring = Coloring(assignment, palette)
    proper = is_proper_coloring(g, coloring) if g.n else True
    return ColorReport(
        coloring=coloring,
        colors_used=coloring.colors_used(),
        palette_bound=palette,
        delta_used=delta,
        alpha_used=alpha,
        proper=proper,
        trace=trace,
    )


def replay_trace(g: Graph, trace: ContractionTrace, delta: int, alpha: int) -> Coloring:
    """Re-run a recorded trace against its original graph, verifying each
    step, and rebuild the coloring from scratch.  Raises ValueError on any
    mismatch between the trace and what the graph dictates."""
    palette = palette_bound(delta, alpha)
    cur = g
    graphs: list[tuple[Graph, TraceStep]] = []
    for step in trace.steps:
        v, d = min_degree_vertex(cur)
        if (v, d) != (step.vertex, step.degree):
            raise ValueError(
                f"trace step expects vertex {step.vertex} of degree {step.degree}, "
                f"graph has ({v}, {d})"
            )
        graphs.append((cur, step))
        if d == 0:
            if step.independent_set or step.merged_vertex is not None:
                raise ValueError("isolated-vertex step must not contract")
            cur = without_vertex(cur, v)
            continue
        nbr_mask = cur.neighbor_mask(v)
        for u in step.independent_set:
            if not (nbr_mask >> u) & 1:
                raise ValueError(f"trace set member {u} is not a neighbor of {v}")
        if not is_independent_set(cur, step.independent_set):
            raise ValueError("trace set is not independent")
        cur, z = contract_set(cur, step.independent_set | {step.vertex})
        if z != step.merged_vertex:
            raise ValueError(f"contraction produced {z}, trace says {step.merged_vertex}")
    if cur.n != trace.base_size:
        raise ValueError(f"base graph has {cur.n} vertices, trace says {trace.base_size}")

    assignment: dict[int, int] = {v: 0 for v in cur.vertices}
    for before, step in reversed(graphs):
        if step.degree == 0:
            color = assignment[min(assignment)] if assignment else 0
        else:
            merged_color = assignment[step.merged_vertex]
            for u in step.independent_set:
                assignment[u] = merged_color
            used = {assignment[u] for u in before.neighbors(step.vertex)}
            color = next((c for c in range(palette) if c not in used), None)
            if color is None:
                raise ValueError("palette exhausted during replay")
        if color != step.color:
            raise ValueError(
                f"replay colors vertex {step.vertex} with {color}, trace says {step.color}"
            )
        assignment[step.vertex] = color
    return Coloring(assignment, palette)


def elimination_order(g: Graph) -> tuple[list[int], int]:
    """Repeated minimum-degree removal; returns (order, degeneracy)."""
    order: list[int] = []
    degeneracy = 0
    cur = g
    while cur.n:
        v, d = min_degree_vertex(cur)
        degeneracy = max(degeneracy, d)
        order.append(v)
        cur = without_vertex(cur, v)
    return order, degeneracy


def greedy_degeneracy_color(g: Graph) -> Coloring:
    """Color along the reverse minimum-degree elimination order with the
    least available color; uses at most degeneracy + 1 colors."""
    order, _ = elimination_order(g)
    assignment: dict[int, int] = {}
    for v in reversed(order):
        used = {assignment[u] for u in g.neighbors(v) if u in assignment}
        c = 0
        while c in used:
            c += 1
        assignment[v] = c
    palette = max(assignment.values()) + 1 if assignment else 0
    return Coloring(assignment, palette)
