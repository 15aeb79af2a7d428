"""Clustering, forest decomposition, and low-arboricity coloring.

Linial-Saks style clustering runs in phases: every still-unclustered vertex
draws a truncated geometric radius, floods its (radius, id) candidacy that
far through the active subgraph, and everyone strictly inside the ball of
the largest candidacy it hears joins that candidate's cluster and retires.
A cluster is identified by (phase, center id), so two vertices sharing a
cluster label lie within 2B of each other in the original graph.

Two interchangeable engines compute it: a message-passing node program (the
round-model reference) and a centralized sweep that produces the identical
clustering from the same seeds; the sweep's message accounting covers only
the floods it actually simulates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graphs import Graph, Orientation
from .labels import LabelDomain, draw_count
from .results import DomainsResult
from .rng import derive_stream, subseed
from .runtime import NodeContext, NodeProgram, RunReport, run_sync


class ArboricityError(ValueError):
    """The claimed arboricity bound is inconsistent with the graph."""

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


def default_radius_cap(n: int) -> int:
    return max(1, math.ceil(2 * math.log2(max(n, 2))))


def default_phase_budget(n: int) -> int:
    return max(8, math.ceil(8 * math.log2(max(n, 2))))


@dataclass(frozen=True)
class Clustering:
    """One clustering execution: per-vertex (phase, center) or None on give-up."""

    clusters: tuple[tuple[int, int] | None, ...]
    phase_count: int
    radius_cap: int
    report: RunReport

    @property
    def failed(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.clusters) if c is None)

    def distinct_clusters(self) -> list[tuple[int, int]]:
        return sorted({c for c in self.clusters if c is not None})


class _LSProgram(NodeProgram):
    """Message-passing Linial-Saks phases (reference round-model engine)."""

    def __init__(self, radius_cap: int, phase_budget: int):
        self.cap = radius_cap
        self.budget = phase_budget

    def init(self, ctx: NodeContext):
        # state: [round_in_phase, phase, radius, heard, cluster]
        # heard: center -> (radius, dist); refreshed every phase
        return [0, 0, 0, {}, None]

    def step(self, ctx: NodeContext, state, inbox):
        j, phase, radius, heard, cluster = state
        cap = self.cap
        outbox = []
        if j == 0:
            radius = ctx.rng.geometric(cap)
            heard = {ctx.node: (radius, 0)}
            if radius >= 1:
                msg = (radius, ctx.node, 1)
                outbox = [(u, msg) for u in ctx.neighbors]
        else:
            for _, (r_w, w, h) in inbox:
                if w not in heard:
                    heard[w] = (r_w, h)
                    if h + 1 <= r_w:
                        fwd = (r_w, w, h + 1)
                        outbox.extend((u, fwd) for u in ctx.neighbors)
        if j == cap:
            r_win, center = max((rd, w) for w, (rd, _) in heard.items())
            dist = heard[center][1]
            if dist < r_win:
                return [0, phase, radius, {}, (phase, center)], [], True
            if phase + 1 >= self.budget:
                return [0, phase, radius, {}, None], [], True  # give up
            return [0, phase + 1, 0, {}, None], [], False
        return [j + 1, phase, radius, heard, cluster], outbox, False

    def output(self, ctx: NodeContext, state):
        return state[4]


def _linial_saks_program(g: Graph, seed: int, radius_cap: int,
                         phase_budget: int) -> Clustering:
    program = _LSProgram(radius_cap, phase_budget)
    report = run_sync(program, g, seed,
                      max_rounds=phase_budget * (radius_cap + 1) + 1)
    clusters = tuple(report.outputs)
    phases = -(-report.rounds // (radius_cap + 1))  # cap+1 rounds per phase
    return Clustering(clusters=clusters, phase_count=phases,
                      radius_cap=radius_cap, report=report)


def _linial_saks_fast(g: Graph, seed: int, radius_cap: int,
                      phase_budget: int) -> Clustering:
    """Centralized sweep; produces the same clustering as the node program.

    Per phase, candidates are processed in decreasing (radius, id) order;
    a bounded BFS through this phase's active vertices claims every vertex
    for the first (hence maximal) candidacy that reaches it, which is exactly
    the program's max-of-heard rule.  The sweep stops early once every active
    vertex is claimed, so message totals reflect only the simulated floods.
    """
    n = g.n
    streams = [derive_stream(seed, v) for v in range(n)]
    clusters: list[tuple[int, int] | None] = [None] * n
    active = set(range(n))
    adjacency = g.adjacency
    messages = 0
    phases_run = 0
    for phase in range(phase_budget):
        if not active:
            break
        phases_run = phase + 1
        radii = {v: streams[v].geometric(radius_cap) for v in sorted(active)}
        claimed: dict[int, tuple[int, int]] = {}  # v -> (center, dist)
        order = sorted(((radii[v], v) for v in active), reverse=True)
        for r_w, w in order:
            if len(claimed) == len(active):
                break
            if w not in claimed:
                claimed[w] = (w, 0)
            if r_w < 1:
                continue
            dist = {w: 0}
            frontier = [w]
            depth = 0
            while frontier and depth < r_w:
                depth += 1
                nxt = []
                for v in frontier:
                    for u in adjacency[v]:
                        if u in active and u not in dist:
                            dist[u] = depth
                            nxt.append(u)
                            messages += 1
                            if u not in claimed:
                                claimed[u] = (w, depth)
                frontier = nxt
        still_active = set()
        for v in active:
            if v in claimed:
                center, d = claimed[v]
                if d < radii[center]:
                    clusters[v] = (phase, center)
                    continue
            still_active.add(v)
        active = still_active
    rounds = phases_run * (radius_cap + 1)
    report = RunReport(rounds=rounds, comm_rounds=rounds, messages_total=messages,
                       outputs=tuple(clusters), seed=seed, incomplete=bool(active))
    return Clustering(clusters=tuple(clusters), phase_count=phases_run,
                      radius_cap=radius_cap, report=report)


def linial_saks(g: Graph, seed: int = 0, radius_cap: int | None = None,
                phase_budget: int | None = None, engine: str = "fast") -> Clustering:
    """One weak-diameter clustering execution.

    Every vertex lands in exactly one cluster whose members sit within
    2*radius_cap of each other in G; a vertex that stays unclustered past the
    phase budget gives up and is reported in ``failed`` (retry with a new
    seed).  ``engine='program'`` runs the message-passing reference,
    ``engine='fast'`` the centralized sweep; both yield identical clusterings
    for the same seed.
    """
    cap = default_radius_cap(g.n) if radius_cap is None else radius_cap
    if cap < 1:
        raise ValueError(f"radius cap must be >= 1, got {cap}")
    budget = default_phase_budget(g.n) if phase_budget is None else phase_budget
    if engine == "program":
        return _linial_saks_program(g, seed, cap, budget)
    if engine == "fast":
        return _linial_saks_fast(g, seed, cap, budget)
    raise ValueError(f"engine must be 'fast' or 'program', got {engine!r}")


def generic_network_decomposition(g: Graph, c: int, seed: int = 0,
                                  radius_cap: int | None = None,
                                  engine: str = "fast") -> DomainsResult:
    """Run c independent clustering executions simultaneously; vertex v's
    domain is {(execution i, cluster of v in run i)}, always of size c.

    Labels encode (execution, cluster): any two vertices sharing a label were
    put in the same cluster by the same execution, so every label class has
    weak diameter at most 2*radius_cap.  Rounds are the maximum over the
    simultaneous executions; a failed execution flags the whole result.
    """
    if c < 2:
        raise ValueError(f"c must be at least 2, got {c}")
    cap = default_radius_cap(g.n) if radius_cap is None else radius_cap
    runs = [
        linial_saks(g, seed=subseed(seed, 0x6E64, i), radius_cap=cap, engine=engine)
        for i in range(1, c + 1)
    ]
    failed = sorted({v for run in runs for v in run.failed})
    dense_maps = []
    for run in runs:
        dense_maps.append({cl: j for j, cl in enumerate(run.distinct_clusters())})
    stride = max((len(m) for m in dense_maps), default=1) or 1
    domains = {}
    for v in range(g.n):
        labels = []
        for i, run in enumerate(runs):
            cl = run.clusters[v]
            if cl is not None:
                labels.append(i * stride + dense_maps[i][cl])
        domains[v] = frozenset(labels)
    dom = LabelDomain(kind="vertex", domains=domains, palette=c * stride,
                      stride=stride)
    report = RunReport(
        rounds=max(r.report.rounds for r in runs),
        comm_rounds=max(r.report.comm_rounds for r in runs),
        messages_total=sum(r.report.messages_total for r in runs),
        outputs=tuple(tuple(sorted(domains[v])) for v in range(g.n)),
        seed=seed,
        incomplete=any(r.report.incomplete for r in runs),
    )
    params = {
        "c": c,
        "radius_cap": cap,
        "phase_counts": [r.phase_count for r in runs],
        "clusters_per_execution": [len(m) for m in dense_maps],
        "stride": stride,
    }
    return DomainsResult(domains=dom, report=report, params=params,
                         failed=tuple(failed))


@dataclass(frozen=True)
class HPartition:
    """Peeling layers: every vertex has at most (2+eps)*a neighbors in its own
    or higher layers, and the induced orientation (toward higher layer, ties
    toward higher id) is acyclic with out-degree at most floor((2+eps)*a)."""

    layer: tuple[int, ...]
    layer_count: int
    threshold: float
    orientation: Orientation
    rounds: int  # one simulated round per peeled layer

    @property
    def max_out_degree_bound(self) -> int:
        return int(self.threshold)


def h_partition(g: Graph, a: int, eps: float = 1.0) -> HPartition:
    """Iterated peeling of low-degree vertices for graphs of arboricity <= a.

    Layer i strips every remaining vertex of remaining degree <= (2+eps)*a.
    If no vertex qualifies while some remain, the arboricity claim is wrong
    and the remaining vertex set is reported as the witness subgraph (all its
    degrees exceed (2+eps)*a >= 2a, impossible at arboricity a).
    """
    if a < 1:
        raise ValueError(f"arboricity bound must be >= 1, got {a}")
    if not 0 < eps <= 2:
        raise ValueError(f"eps must be in (0, 2], got {eps}")
    threshold = (2 + eps) * a
    cap = (math.floor((2 / eps) * math.log2(g.n)) + 1) if g.n >= 2 else 1
    degree = [g.degree(v) for v in range(g.n)]
    layer = [0] * g.n
    remaining = set(range(g.n))
    level = 0
    while remaining:
        level += 1
        peel = [v for v in remaining if degree[v] <= threshold]
        if not peel:
            raise ArboricityError(
                f"no vertex of degree <= {threshold} left; arboricity bound "
                f"{a} violated", tuple(sorted(remaining)))
        if level > cap:
            raise ArboricityError(
                f"peeling exceeded the {cap}-layer bound; arboricity bound "
                f"{a} violated", tuple(sorted(remaining)))
        for v in peel:
            layer[v] = level
            remaining.discard(v)
        for v in peel:
            for u in g.adjacency[v]:
                degree[u] -= 1
    target = []
    for u, v in g.edges:
        ku, kv = (layer[u], u), (layer[v], v)
        target.append(v if kv > ku else u)
    orientation = Orientation.from_targets(g, target, acyclic=True)
    return HPartition(layer=tuple(layer), layer_count=level, threshold=threshold,
                      orientation=orientation, rounds=level)


@dataclass(frozen=True)
class ForestLabeling:
    """Edge labels in 1..forest_count, each assigned by one endpoint such that
    a vertex's assigned edges carry pairwise distinct labels; every label
    class is then a forest (each vertex has at most one parent per class)."""

    edge_labels: tuple[int, ...]
    assigner: tuple[int, ...]
    forest_count: int
    orientation: Orientation

    def domain(self) -> LabelDomain:
        """From the edge's viewpoint every label is possible: contingency 1."""
        full = frozenset(range(self.forest_count))
        return LabelDomain(
            kind="edge",
            domains={e: full for e in range(len(self.edge_labels))},
            palette=max(self.forest_count, 1),
        )


class _ForestIdProgram(NodeProgram):
    """Two communication rounds: exchange ids to orient, then send each
    higher-id neighbor a random distinct label for the shared edge."""

    def __init__(self, forest_count: int):
        self.forest_count = forest_count

    def init(self, ctx: NodeContext):
        return [0, (), ()]

    def step(self, ctx: NodeContext, state, inbox):
        r = state[0]
        if r == 0:
            return [1, (), ()], [(u, ctx.node) for u in ctx.neighbors], False
        if r == 1:
            higher = sorted(nid for _, nid in inbox if nid > ctx.node)
            numbers = ctx.rng.shuffle(list(range(1, self.forest_count + 1)))
            assigned = tuple(zip(higher, numbers))
            return [2, assigned, ()], [(u, num) for u, num in assigned], False
        received = tuple(sorted((u, num) for u, num in inbox))
        return [3, state[1], received], [], True

    def output(self, ctx: NodeContext, state):
        return (state[1], state[2])


def forest_decomposition(g: Graph, mode: str = "id", a: int | None = None,
                         eps: float = 1.0, seed: int = 0
                         ) -> tuple[ForestLabeling, LabelDomain, RunReport]:
    """Label every edge with a forest index; every label class is acyclic.

    id mode: orient toward higher ids and number out-edges in two rounds,
    with forest_count = max degree.  h-partition mode: orient via the peeling
    partition, with forest_count = floor((2+eps)*a).  Either way each vertex
    draws its numbering uniformly at random among injective assignments, so
    every distinct assignment (and every per-edge label) stays valid.
    """
    if mode == "id":
        forest_count = g.max_degree
        program = _ForestIdProgram(forest_count)
        report = run_sync(program, g, seed, max_rounds=4)
        labels = [0] * g.m
        assigner = [0] * g.m
        for v in range(g.n):
            for u, num in report.outputs[v][0]:
                e = g.edge_id(v, u)
                labels[e] = num
                assigner[e] = v
        from .graphs import orient_by_id

        labeling = ForestLabeling(tuple(labels), tuple(assigner), forest_count,
                                  orient_by_id(g))
        return labeling, labeling.domain(), report
    if mode == "h-partition":
        if a is None:
            raise ValueError("h-partition mode requires the arboricity bound a")
        hp = h_partition(g, a, eps)
        forest_count = math.floor((2 + eps) * a)
        orientation = hp.orientation
        labels = [0] * g.m
        assigner = [0] * g.m
        messages = 0
        for v in range(g.n):
            rng = derive_stream(seed, v)
            numbers = rng.shuffle(list(range(1, forest_count + 1)))
            for num, e in zip(numbers, orientation.out_edges(v)):
                labels[e] = num
                assigner[e] = v
                messages += 1
        rounds = hp.rounds + 1
        report = RunReport(rounds=rounds, comm_rounds=rounds,
                           messages_total=messages,
                           outputs=tuple(zip(labels, assigner)), seed=seed)
        labeling = ForestLabeling(tuple(labels), tuple(assigner), forest_count,
                                  orientation)
        return labeling, labeling.domain(), report
    raise ValueError(f"mode must be 'id' or 'h-partition', got {mode!r}")


class _ArboricityColoringProgram(NodeProgram):
    """Draw k tagged values from [2A], send them down the orientation, and
    drop anything received from a parent.  Each edge has one direction, so
    adjacent surviving sets are disjoint outright."""

    def __init__(self, k: int, value_range: int, children: list[tuple[int, ...]],
                 parent_count: list[int]):
        self.k = k
        self.value_range = value_range
        self.children = children
        self.parent_count = parent_count

    def init(self, ctx: NodeContext):
        return None

    def step(self, ctx: NodeContext, state, inbox):
        if state is None:
            values = ctx.rng.draw_many(self.k, self.value_range)
            picks = frozenset(i * self.value_range + x for i, x in enumerate(values))
            kids = self.children[ctx.node]
            halt = self.parent_count[ctx.node] == 0
            return picks, [(u, picks) for u in kids], halt
        kept = state
        for _, theirs in inbox:
            kept -= theirs
        return kept, [], True

    def output(self, ctx: NodeContext, state):
        return tuple(sorted(state))


def arboricity_generic_coloring(g: Graph, a: int, eps: float = 1.0,
                                c: float = 4.0, seed: int = 0) -> DomainsResult:
    """Generic coloring for arboricity-a graphs: acyclic low-out-degree
    orientation via the peeling partition, then one round of parent-to-child
    color-set pruning.  Palette 2*floor((2+eps)*a)*k."""
    hp = h_partition(g, a, eps)
    bound = math.floor((2 + eps) * a)
    k = draw_count(c, g.n)
    value_range = 2 * bound
    orientation = hp.orientation
    children: list[list[int]] = [[] for _ in range(g.n)]
    parent_count = [0] * g.n
    for v in range(g.n):
        for e in orientation.out_edges(v):
            children[orientation.target[e]].append(v)
            parent_count[v] += 1
    program = _ArboricityColoringProgram(
        k, value_range, [tuple(ch) for ch in children], parent_count)
    report = run_sync(program, g, seed)
    domains = {v: frozenset(report.outputs[v]) for v in range(g.n)}
    failed = tuple(v for v in range(g.n) if not domains[v])
    dom = LabelDomain(kind="vertex", domains=domains, palette=value_range * k,
                      stride=value_range)
    params = {
        "a": a,
        "eps": eps,
        "c": c,
        "k": k,
        "out_degree_bound": bound,
        "value_range": value_range,
        "layers": hp.layer_count,
        "rounds_total": hp.rounds + 1,
    }
    return DomainsResult(domains=dom, report=report, params=params, failed=failed)
