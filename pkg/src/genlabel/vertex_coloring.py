"""Generic vertex-coloring algorithms, each run as a node program.

Every algorithm here computes, for each vertex, a *set* of labels such that
any private choice from the sets is globally valid: disjoint neighbor sets
for proper coloring, bounded per-label neighbor multiplicity for defective
coloring.  The second (private, uniform) selection stage is trivial and left
to the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coverfree import PolyFamily, smallest_prime_geq
from .graphs import Graph, Orientation, log_star
from .labels import LabelDomain, draw_count
from .results import ColoringResult, DomainsResult
from .runtime import NodeContext, NodeProgram, run_sync

# ---------------------------------------------------------------------------
# 3-coloring of oriented forests and its domain expansion


def _reduction_rounds(n: int) -> int:
    """Rounds of bit-index reduction needed to bring n colors down to <= 6."""
    count = 0
    palette = max(n, 1)
    while palette > 6:
        palette = 2 * math.ceil(math.log2(palette))
        count += 1
    return count


def _bit_reduce(own: int, other: int) -> int:
    diff = own ^ other
    i = (diff & -diff).bit_length() - 1  # lowest differing bit index
    return 2 * i + ((own >> i) & 1)


class _ColeVishkinProgram(NodeProgram):
    """Forest 3-coloring: iterated bit reduction, then three shift/recolor passes.

    Colors travel parent -> children every round.  Roots synthesize a parent
    color by flipping their lowest bit during reduction and rotate their color
    (+1 mod 3) during shift rounds, which keeps every intermediate coloring
    proper.
    """

    def __init__(self, parent: list[int], children: list[tuple[int, ...]], n: int):
        self.parent = parent
        self.children = children
        self.rounds_reduce = _reduction_rounds(n)

    def init(self, ctx: NodeContext):
        # state: [round_index, color, pre_shift_color]
        return [0, ctx.node, -1]

    def step(self, ctx: NodeContext, state, inbox):
        r, color, remembered = state
        parent_color = inbox[0][1] if inbox else None
        t = self.rounds_reduce
        if 1 <= r <= t:
            against = parent_color if parent_color is not None else color ^ 1
            color = _bit_reduce(color, against)
        elif r > t:
            phase = r - t - 1  # 0..5: shift/recolor for targets 5, 4, 3
            target = 5 - phase // 2
            if phase % 2 == 0:  # shift down
                remembered = color
                color = parent_color if parent_color is not None else (color + 1) % 3
            elif color == target:  # recolor: avoid parent and (uniform) children
                forbidden = {parent_color, remembered}
                color = min(c for c in (0, 1, 2) if c not in forbidden)
        state = [r + 1, color, remembered]
        if r == t + 6:
            return state, [], True
        return state, [(u, color) for u in self.children[ctx.node]], False

    def output(self, ctx: NodeContext, state):
        return state[1]


def cole_vishkin_3coloring(g: Graph, orientation: Orientation,
                           max_rounds: int | None = None,
                           master_seed: int = 0) -> ColoringResult:
    """Proper 3-coloring of an oriented forest in about log*(n) rounds.

    The orientation must have out-degree at most 1 everywhere (each vertex
    knows its unique parent) and be acyclic.
    """
    if orientation.graph is not g and orientation.graph != g:
        raise ValueError("orientation was built for a different graph")
    if not orientation.acyclic:
        raise ValueError("orientation must be acyclic")
    if orientation.max_out_degree > 1:
        bad = next(v for v in range(g.n) if orientation.out_degree(v) > 1)
        raise ValueError(f"not an oriented forest: vertex {bad} has out-degree > 1")
    parent = [-1] * g.n
    children: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        for e in orientation.out_edges(v):
            parent[v] = orientation.target[e]
            children[parent[v]].append(v)
    program = _ColeVishkinProgram(parent, [tuple(c) for c in children], g.n)
    budget = max_rounds if max_rounds is not None else _reduction_rounds(g.n) + 8
    report = run_sync(program, g, master_seed, max_rounds=budget)
    rounds_bound = log_star(max(g.n, 2))
    params = {
        "reduction_rounds": program.rounds_reduce,
        "log_star_n": rounds_bound,
        "round_constant": report.rounds - rounds_bound,
    }
    return ColoringResult(colors=report.outputs, report=report, params=params)


def expand_to_generic(coloring, delta: int) -> LabelDomain:
    """Blow a proper 3-coloring up into per-vertex domains of size delta.

    Vertex v gets {(i, color(v)) : 0 <= i < delta}; neighbor domains are
    disjoint because the second component already differs.  Palette 3*delta.
    """
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    colors = list(coloring)
    if any(c not in (0, 1, 2) for c in colors):
        raise ValueError("expected a 3-coloring with colors in {0,1,2}")
    domains = {
        v: frozenset(i * 3 + c for i in range(delta))
        for v, c in enumerate(colors)
    }
    return LabelDomain(kind="vertex", domains=domains, palette=3 * delta, stride=3)


# ---------------------------------------------------------------------------
# one-round random coloring


class _RandomColoringProgram(NodeProgram):
    """Draw k tagged values, exchange once, drop anything a neighbor also drew."""

    def __init__(self, k: int, value_range: int):
        self.k = k
        self.value_range = value_range

    def init(self, ctx: NodeContext):
        return None

    def step(self, ctx: NodeContext, state, inbox):
        if state is None:
            values = ctx.rng.draw_many(self.k, self.value_range)
            picks = frozenset(i * self.value_range + x for i, x in enumerate(values))
            return picks, [(u, picks) for u in ctx.neighbors], False
        kept = state
        for _, theirs in inbox:
            kept -= theirs
        return kept, [], True

    def output(self, ctx: NodeContext, state):
        return tuple(sorted(state))


def generic_random_coloring(g: Graph, c: float = 4.0, seed: int = 0,
                            delta_bound: int | None = None) -> DomainsResult:
    """One-round generic coloring: k = ceil(c*log2 n) tagged draws per vertex
    from a value range of twice the degree bound, followed by symmetric
    removal of any exact collision with a neighbor.

    Surviving sets of adjacent vertices are disjoint by construction; around
    half of each set survives.  A vertex whose set empties marks the run
    failed (retry with a new seed).  Palette 2*delta*k.
    """
    delta = g.max_degree if delta_bound is None else delta_bound
    if delta < g.max_degree:
        raise ValueError(f"delta_bound {delta} below realized max degree {g.max_degree}")
    delta = max(delta, 1)
    k = draw_count(c, g.n)
    value_range = 2 * delta
    report = run_sync(_RandomColoringProgram(k, value_range), g, seed)
    domains = {v: frozenset(report.outputs[v]) for v in range(g.n)}
    failed = tuple(v for v in range(g.n) if not domains[v])
    dom = LabelDomain(kind="vertex", domains=domains, palette=value_range * k,
                      stride=value_range)
    params = {"c": c, "k": k, "delta": delta, "value_range": value_range}
    return DomainsResult(domains=dom, report=report, params=params, failed=failed)


# ---------------------------------------------------------------------------
# cover-free reduction pipeline (proper and defective variants)


def _iroot_ceil(n: int, k: int) -> int:
    """Smallest r with r**k >= n."""
    if n <= 1:
        return 1
    r = max(1, round(n ** (1.0 / k)))
    while r**k < n:
        r += 1
    while (r - 1) ** k >= n:
        r -= 1
    return r


def _pick_reduction(n_colors: int, delta: int) -> tuple[int, int] | None:
    """Choose (d, q) minimizing the next palette q^2, or None if no shrink."""
    best = None
    for d in (1, 2, 3):
        q = smallest_prime_geq(max(d * (delta + 1) + 1, _iroot_ceil(n_colors, d + 1)))
        if q * q >= n_colors:
            continue
        if best is None or q * q < best[1] * best[1]:
            best = (d, q)
    return best


def reduction_schedule(n: int, delta: int, final_prime: int) -> list[tuple[int, int]]:
    """The (d, q) reduction steps taken before the final residual round."""
    steps = []
    colors = max(n, 1)
    while colors > final_prime**3:
        step = _pick_reduction(colors, delta)
        if step is None:
            break
        steps.append(step)
        colors = step[1] ** 2
    return steps


class _PipelineProgram(NodeProgram):
    """Iterated cover-free color reduction ending in a residual-set round.

    Starts from the id-coloring; each round vertices exchange current colors
    and re-color to the smallest element of their polynomial point set not
    covered by any neighbor's set.  The last round keeps, instead of one
    element, every element covered at most ``rho`` times.
    """

    def __init__(self, steps: list[tuple[int, int]], final: PolyFamily, rho: int):
        self.steps = steps
        self.families = [PolyFamily(q=q, d=d) for d, q in steps]
        self.final = final
        self.rho = rho

    def init(self, ctx: NodeContext):
        return [0, ctx.node, ()]

    def step(self, ctx: NodeContext, state, inbox):
        r, color, domain = state
        t = len(self.steps)
        if 1 <= r <= t:
            fam = self.families[r - 1]
            mine = set(fam.set_elements(color))
            for _, their_color in inbox:
                if their_color != color:
                    mine -= fam.set_elements(their_color)
            if not mine:
                raise ValueError(
                    f"vertex {ctx.node}: no uncovered element left; "
                    "input coloring was not proper")
            color = min(mine)
        if r == t + 1:
            counts: dict[int, int] = {}
            for _, their_color in inbox:
                if their_color != color:
                    for x in self.final.set_elements(their_color):
                        counts[x] = counts.get(x, 0) + 1
            domain = tuple(sorted(
                x for x in self.final.set_elements(color)
                if counts.get(x, 0) <= self.rho))
            return [r + 1, color, domain], [], True
        return [r + 1, color, domain], [(u, color) for u in ctx.neighbors], False

    def output(self, ctx: NodeContext, state):
        return state[2]


def _plan_pipeline(n: int, delta: int, base_prime: int) -> tuple[list[tuple[int, int]], int]:
    """Reduction steps against the base threshold, plus the final prime.

    The final prime is bumped (rarely: only when no reduction could shrink the
    palette below base_prime**3) so its family always indexes every hand-off
    color.
    """
    steps = reduction_schedule(n, delta, base_prime)
    handoff = max(n, 1) if not steps else steps[-1][1] ** 2
    q_final = smallest_prime_geq(max(base_prime, _iroot_ceil(handoff, 3)))
    return steps, q_final


def _run_pipeline(g: Graph, delta: int, steps: list[tuple[int, int]],
                  final_prime: int, rho: int, master_seed: int) -> DomainsResult:
    final = PolyFamily(q=final_prime, d=2)
    program = _PipelineProgram(steps, final, rho)
    report = run_sync(program, g, master_seed, max_rounds=len(steps) + 2)
    domains = {v: frozenset(report.outputs[v]) for v in range(g.n)}
    dom = LabelDomain(kind="vertex", domains=domains, palette=final_prime**2,
                      stride=final_prime)
    failed = tuple(v for v in range(g.n) if not domains[v])
    params = {
        "delta": delta,
        "q_final": final_prime,
        "rho": rho,
        "reduction_steps": [list(s) for s in steps],
        "log_star_n": log_star(max(g.n, 2)),
    }
    return DomainsResult(domains=dom, report=report, params=params, failed=failed)


def linial_reduce_round(g: Graph, colors, fam: PolyFamily) -> list[int]:
    """One reduction round: exchange colors, then every vertex moves to the
    smallest element of its set not covered by any neighbor's set.

    Requires a family with at least as many sets as input colors and
    cover-freeness degree at least the graph's maximum degree; an improper
    input coloring may surface as a vertex with no uncovered element.
    """
    colors = list(colors)
    n_colors = max(colors, default=0) + 1
    if fam.family_size < n_colors:
        raise ValueError(
            f"family has {fam.family_size} sets, fewer than {n_colors} colors")
    if fam.cover_free_degree < g.max_degree:
        raise ValueError(
            f"family tolerates {fam.cover_free_degree} covering sets, "
            f"graph degree is {g.max_degree}")
    fresh = []
    for v in range(g.n):
        mine = set(fam.set_elements(colors[v]))
        for u in g.adjacency[v]:
            mine -= fam.set_elements(colors[u])
        if not mine:
            raise ValueError(
                f"vertex {v}: no uncovered element left; input coloring improper?")
        fresh.append(min(mine))
    return fresh


def generic_delta2_coloring(g: Graph, delta_bound: int | None = None,
                            master_seed: int = 0) -> DomainsResult:
    """Deterministic generic coloring with palette q^2, q the smallest prime
    >= 3*delta: iterated cover-free reductions from the id-coloring, then one
    residual round that keeps every uncovered element (at least delta of them).
    """
    delta = g.max_degree if delta_bound is None else delta_bound
    if delta < g.max_degree:
        raise ValueError(f"delta_bound {delta} below realized max degree {g.max_degree}")
    delta = max(delta, 1)
    base = smallest_prime_geq(max(3 * delta, 2))
    steps, q_final = _plan_pipeline(g.n, delta, base)
    return _run_pipeline(g, delta, steps, q_final, rho=0, master_seed=master_seed)


def generic_defective_coloring(g: Graph, p: int, delta_bound: int | None = None,
                               master_seed: int = 0) -> DomainsResult:
    """Generic p-defective coloring: proper reductions while the palette is
    large, then a single residual round keeping elements covered at most p
    times.  Any joint selection has defect at most p because at most p
    neighbor sets can contain any kept element.
    """
    delta = g.max_degree if delta_bound is None else delta_bound
    if delta < g.max_degree:
        raise ValueError(f"delta_bound {delta} below realized max degree {g.max_degree}")
    if not 1 <= p <= max(delta, 1):
        raise ValueError(f"p must be in [1, {max(delta, 1)}], got {p}")
    delta = max(delta, 1)
    q_base = smallest_prime_geq(max(math.ceil(3 * delta / (p + 1)), 2))
    steps, q_final = _plan_pipeline(g.n, delta, q_base)
    result = _run_pipeline(g, delta, steps, q_final, rho=p, master_seed=master_seed)
    result.params["p"] = p
    result.params["domain_floor"] = max(1, delta // (4 * (p + 1)))
    return result
