"""Edge-labeling algorithms: line-graph reductions, one-round defective
coloring, and a generically colored edge dominating set.

Line-graph runs reuse the vertex algorithms on L(G) verbatim (the draw budget
k uses L(G)'s vertex count, i.e. the edge count of G); the higher-id endpoint
of each edge is recorded as the node responsible for simulating it.  The
dominating-set algorithm replaces its two cited subroutines with simple
randomized ones, so its round count is reported but carries no bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graphs import Graph, line_graph
from .labels import LabelDomain
from .results import DomainsResult
from .rng import subseed
from .runtime import NodeContext, NodeProgram, RunReport, run_sync
from .vertex_coloring import generic_delta2_coloring, generic_random_coloring


def _edge_owners(g: Graph) -> tuple[int, ...]:
    return tuple(max(u, v) for u, v in g.edges)


def edge_coloring_via_line_graph(g: Graph, variant: str = "random",
                                 c: float = 4.0, seed: int = 0) -> DomainsResult:
    """Run a generic vertex coloring on L(G) to get per-edge label domains.

    Adjacent edges share an endpoint, hence are adjacent in L(G), hence get
    disjoint domains.  The degree bound handed to the vertex algorithm is
    2*max_degree(G) - 1, the line graph's classic degree bound, which also
    keeps the delta2 variant's domains at 2*max_degree(G) - 1 or larger.
    """
    lg, mapping = line_graph(g)
    bound = max(1, 2 * g.max_degree - 1)
    if variant == "random":
        base = generic_random_coloring(lg, c=c, seed=seed, delta_bound=bound)
    elif variant == "delta2":
        base = generic_delta2_coloring(lg, delta_bound=bound, master_seed=seed)
    else:
        raise ValueError(f"variant must be 'random' or 'delta2', got {variant!r}")
    domains = {e: base.domains.domains[mapping[e]] for e in range(g.m)}
    dom = LabelDomain(kind="edge", domains=domains, palette=base.domains.palette,
                      stride=base.domains.stride)
    params = dict(base.params)
    params["variant"] = variant
    params["owners"] = list(_edge_owners(g))
    return DomainsResult(domains=dom, report=base.report, params=params,
                         failed=base.failed)


# ---------------------------------------------------------------------------
# one-round defective edge coloring


def pair_palette(numbers: int) -> list[tuple[int, int]]:
    """All unordered pairs {a, b} with 1 <= a <= b <= numbers, in lexicographic
    order; the coloring's palette of C(numbers+1, 2) colors."""
    return [(a, b) for a in range(1, numbers + 1) for b in range(a, numbers + 1)]


@dataclass(frozen=True)
class KuhnEdgeColoring:
    """Final edge colors as canonical indices into the unordered-pair palette.

    ``numbering[v]`` is vertex v's assignment table: (neighbor, number) per
    incident edge, each number used on at most ``multiplicity`` of them.
    """

    colors: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    palette: tuple[tuple[int, int], ...]
    numbers: int
    multiplicity: int
    numbering: tuple[tuple[tuple[int, int], ...], ...]
    defect_bound: int
    report: RunReport
    params: dict = field(default_factory=dict)

    @property
    def palette_size(self) -> int:
        return len(self.palette)


class _KuhnProgram(NodeProgram):
    """Each vertex numbers its incident edges with a random valid numbering
    (a uniformly random ordering of the edges, number = ceil(position/i)) and
    tells each neighbor the number of the shared edge; an edge's color is the
    unordered pair of the two numbers."""

    def __init__(self, multiplicity: int):
        self.multiplicity = multiplicity

    def init(self, ctx: NodeContext):
        return [0, (), ()]

    def step(self, ctx: NodeContext, state, inbox):
        if state[0] == 0:
            order = ctx.rng.shuffle(list(ctx.neighbors))
            mine = tuple(sorted(
                (u, pos // self.multiplicity + 1) for pos, u in enumerate(order)))
            return [1, mine, ()], [(u, num) for u, num in mine], not mine
        theirs = tuple(sorted((u, num) for u, num in inbox))
        return [2, state[1], theirs], [], True

    def output(self, ctx: NodeContext, state):
        return (state[1], state[2])


def kuhn_defective_edge_coloring(g: Graph, i: int, seed: int = 0) -> KuhnEdgeColoring:
    """One-round defective edge coloring with C(ceil(max_degree/i)+1, 2) colors
    and per-edge defect at most 4i-2.

    Each endpoint assigns each number to at most i of its edges, so at most
    2i-1 other edges per endpoint can agree on the edge's pair, giving the
    4i-2 bound.  Both endpoints learn the color; the numbering is drawn
    uniformly so every palette color is reachable for an edge whose endpoints
    both have full degree.
    """
    delta = g.max_degree
    if not 1 <= i <= max(delta, 1):
        raise ValueError(f"i must be in [1, {max(delta, 1)}], got {i}")
    numbers = -(-delta // i) if delta else 1
    program = _KuhnProgram(i)
    report = run_sync(program, g, seed, max_rounds=3)
    palette = pair_palette(numbers)
    index = {pair: k for k, pair in enumerate(palette)}
    assigned: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        for u, num in report.outputs[v][0]:
            assigned[(v, u)] = num
    pairs = []
    colors = []
    for u, v in g.edges:
        a, b = assigned[(u, v)], assigned[(v, u)]
        pair = (a, b) if a <= b else (b, a)
        pairs.append(pair)
        colors.append(index[pair])
    params = {"i": i, "numbers": numbers, "palette_size": len(palette)}
    return KuhnEdgeColoring(colors=tuple(colors), pairs=tuple(pairs),
                            palette=tuple(palette), numbers=numbers,
                            multiplicity=i,
                            numbering=tuple(out[0] for out in report.outputs),
                            defect_bound=4 * i - 2, report=report, params=params)


# ---------------------------------------------------------------------------
# substitute subroutines: proper edge coloring and maximal matching


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int | None, ...]
    palette_size: int
    report: RunReport


class _ProposalColoringProgram(NodeProgram):
    """Random-proposal vertex coloring, run on L(G) for edge coloring: an
    uncolored node proposes a color its colored neighbors don't hold and keeps
    it unless an adjacent proposal collides."""

    def __init__(self, palette_size: int):
        self.palette = palette_size

    def init(self, ctx: NodeContext):
        # state: [phase, color, taken (neighbor colors), proposal]
        return ["propose", None, set(), None]

    def step(self, ctx: NodeContext, state, inbox):
        phase, color, taken, proposal = state
        if phase == "propose":
            for _, (kind, value) in inbox:
                if kind == "fixed":
                    taken.add(value)
            free = [x for x in range(self.palette) if x not in taken]
            proposal = free[ctx.rng.draw_uniform(len(free))]
            out = [(u, ("proposal", proposal)) for u in ctx.neighbors]
            return ["resolve", color, taken, proposal], out, False
        clashed = False
        for _, (kind, value) in inbox:
            if kind == "proposal" and value == proposal:
                clashed = True
            elif kind == "fixed":
                taken.add(value)
        if not clashed:
            out = [(u, ("fixed", proposal)) for u in ctx.neighbors]
            return ["done", proposal, taken, None], out, True
        return ["propose", color, taken, None], [], False

    def output(self, ctx: NodeContext, state):
        return state[1]


def simple_edge_coloring(g: Graph, palette_size: int | None = None,
                         seed: int = 0, max_rounds: int | None = None) -> EdgeColoring:
    """Proper edge coloring by repeated random proposals on the line graph.

    Needs a palette of at least 2*max_degree - 1 (so a free color always
    exists); with 3*max_degree or more it terminates in logarithmically many
    rounds with high probability, else the report is flagged incomplete.
    """
    delta = max(g.max_degree, 1)
    palette = 3 * delta if palette_size is None else palette_size
    if palette < 2 * delta - 1:
        raise ValueError(f"palette {palette} below 2*max_degree-1 = {2 * delta - 1}")
    lg, mapping = line_graph(g)
    budget = max_rounds if max_rounds is not None else 24 * (int(math.log2(g.m + 2)) + 2)
    report = run_sync(_ProposalColoringProgram(palette), lg, seed, max_rounds=budget)
    colors = tuple(report.outputs[mapping[e]] for e in range(g.m))
    return EdgeColoring(colors=colors, palette_size=palette, report=report)


@dataclass(frozen=True)
class Matching:
    edges: frozenset[int]
    report: RunReport


class _MatchingProgram(NodeProgram):
    """Randomized maximal matching: free endpoints exchange per-edge random
    keys, an edge whose combined key is the local maximum at both endpoints
    joins the matching, and matched vertices withdraw."""

    def init(self, ctx: NodeContext):
        # state: [phase, matched_to, free_neighbors, keys_mine, keys_theirs, pick]
        return ["keys", None, set(ctx.neighbors), {}, {}, None]

    def step(self, ctx: NodeContext, state, inbox):
        phase, matched_to, free_nbrs, mine, theirs, pick = state
        if phase == "keys":
            for _, msg in inbox:
                if msg[0] == "gone":
                    free_nbrs.discard(msg[1])
            if not free_nbrs:
                return ["done", None, free_nbrs, {}, {}, None], [], True
            mine = {u: ctx.rng.draw_u64() for u in sorted(free_nbrs)}
            out = [(u, ("key", ctx.node, mine[u])) for u in sorted(free_nbrs)]
            return ["pick", None, free_nbrs, mine, {}, None], out, False
        if phase == "pick":
            theirs = {}
            for _, msg in inbox:
                if msg[0] == "key":
                    theirs[msg[1]] = msg[2]
            candidates = [u for u in sorted(free_nbrs) if u in theirs]
            if not candidates:
                return ["keys", None, free_nbrs, {}, {}, None], [], False
            def strength(u):
                lo, hi = min(ctx.node, u), max(ctx.node, u)
                return (mine[u] ^ theirs[u], lo, hi)
            pick = max(candidates, key=strength)
            return ["resolve", None, free_nbrs, mine, theirs, pick], \
                [(pick, ("pick", ctx.node))], False
        # resolve: the edge is matched iff both endpoints picked each other
        pickers = {msg[1] for _, msg in inbox if msg[0] == "pick"}
        if pick is not None and pick in pickers:
            out = [(u, ("gone", ctx.node)) for u in sorted(free_nbrs) if u != pick]
            return ["done", pick, set(), {}, {}, None], out, True
        return ["keys", None, free_nbrs, {}, {}, None], [], False

    def output(self, ctx: NodeContext, state):
        return state[1]


def maximal_matching(g: Graph, seed: int = 0,
                     max_rounds: int | None = None) -> Matching:
    """Distributed maximal matching by symmetric random proposals.

    The globally strongest eligible edge always matches, so progress is
    guaranteed; with high probability the run finishes within the default
    logarithmic round budget, else it is flagged incomplete.
    """
    budget = max_rounds if max_rounds is not None else 48 * (int(math.log2(g.n + 2)) + 2)
    report = run_sync(_MatchingProgram(), g, seed, max_rounds=budget)
    matched = set()
    for v in range(g.n):
        u = report.outputs[v]
        if u is not None:
            matched.add(g.edge_id(v, u))
    return Matching(edges=frozenset(matched), report=report)


# ---------------------------------------------------------------------------
# generically colored edge dominating set


@dataclass(frozen=True)
class DominatingColoredSet:
    """A dominating edge set split into per-class matchings with disjoint
    per-class color ranges: class i edges may pick any of its t colors."""

    dominating: frozenset[int]
    class_of: tuple[int, ...]
    class_count: int
    colors_per_class: int
    base_colors: tuple[int | None, ...]
    domains: LabelDomain
    report: RunReport
    params: dict = field(default_factory=dict)

    def to_document(self) -> dict:
        return {
            "params": dict(self.params),
            "run": self.report.to_document(),
            "dominating": sorted(self.dominating),
            "class_of": list(self.class_of),
            "labels": self.domains.to_document(),
        }


def edge_class_of_color(color: int, class_width: int) -> int:
    """1-based class index of a base color under the palette partition."""
    return color // class_width + 1


def dominating_edge_coloring(g: Graph, c: int = 3, t: int = 3, seed: int = 0,
                             max_rounds: int | None = None) -> DominatingColoredSet:
    """Colored edge dominating set: properly color edges with c*max_degree
    colors, split the palette into ceil(sqrt(max_degree)) classes, compute one
    maximal matching per class, and give class i's matching the color range
    [(i-1)*t, i*t).

    The union of the matchings dominates every edge; classes are matchings
    with disjoint ranges, so any joint selection is a proper partial edge
    coloring.  Problem domain t*s, solution domain t, contingency factor
    s = ceil(sqrt(max_degree)).
    """
    if c < 3:
        raise ValueError(f"c must be at least 3, got {c}")
    if t < 2:
        raise ValueError(f"t must be greater than 1, got {t}")
    delta = max(g.max_degree, 1)
    s = math.isqrt(delta)
    if s * s < delta:
        s += 1
    base_palette = c * delta
    width = -(-base_palette // s)
    coloring = simple_edge_coloring(g, palette_size=base_palette,
                                    seed=subseed(seed, 0x6563),
                                    max_rounds=max_rounds)
    class_of = tuple(
        edge_class_of_color(col, width) if col is not None else 0
        for col in coloring.colors)
    dominating: set[int] = set()
    matching_reports = []
    for cls in range(1, s + 1):
        members = [e for e in range(g.m) if class_of[e] == cls]
        sub = Graph.from_edges(g.n, [g.edges[e] for e in members])
        match = maximal_matching(sub, seed=subseed(seed, 0x6D6D, cls),
                                 max_rounds=max_rounds)
        matching_reports.append(match.report)
        for se in match.edges:
            u, v = sub.edges[se]
            dominating.add(g.edge_id(u, v))
    domains = {
        e: frozenset(range((class_of[e] - 1) * t, class_of[e] * t))
        for e in sorted(dominating)
    }
    dom = LabelDomain(kind="edge", domains=domains, palette=t * s, stride=t)
    rounds = coloring.report.rounds + max((r.rounds for r in matching_reports), default=0)
    comm = coloring.report.comm_rounds + max(
        (r.comm_rounds for r in matching_reports), default=0)
    messages = coloring.report.messages_total + sum(
        r.messages_total for r in matching_reports)
    incomplete = coloring.report.incomplete or any(
        r.incomplete for r in matching_reports)
    report = RunReport(rounds=rounds, comm_rounds=comm, messages_total=messages,
                       outputs=tuple(sorted(dominating)), seed=seed,
                       incomplete=incomplete)
    params = {
        "c": c,
        "t": t,
        "classes": s,
        "class_width": width,
        "base_palette": base_palette,
        "round_accounting": "substitute-subroutine",
    }
    return DominatingColoredSet(
        dominating=frozenset(dominating), class_of=class_of, class_count=s,
        colors_per_class=t, base_colors=coloring.colors, domains=dom,
        report=report, params=params)
