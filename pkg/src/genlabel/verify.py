"""Independent checkers for validity invariants and the privacy metrics.

Every checker here is a pure function of its inputs, re-implemented from the
definitions (BFS, union-find, incidence scans) without calling any algorithm
module, so the checkers double as oracles for the algorithms' outputs.

Metrics: the problem domain is the declared palette; the solution domain is
the minimum per-entity domain size; the contingency factor is their ratio
(1 is perfect).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from statistics import median_low

from .graphs import Graph
from .labels import LabelDomain
from .rng import derive_stream, subseed

EXHAUSTIVE_SELECTION_BUDGET = 1_000_000
SAMPLED_SELECTIONS = 1000


@dataclass(frozen=True)
class Verdict:
    name: str
    ok: bool
    status: str = "ok"  # ok | violated | incomplete | degenerate
    detail: str = ""
    counterexample: object = None

    def to_document(self) -> dict:
        doc = {"name": self.name, "ok": self.ok, "status": self.status}
        if self.detail:
            doc["detail"] = self.detail
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        return doc


def _ok(name: str, detail: str = "") -> Verdict:
    return Verdict(name=name, ok=True, detail=detail)


def _fail(name: str, status: str, detail: str, counterexample=None) -> Verdict:
    return Verdict(name=name, ok=False, status=status, detail=detail,
                   counterexample=counterexample)


def check_proper_vertex(g: Graph, labels) -> Verdict:
    """No edge may join two equal labels; missing labels are 'incomplete'."""
    name = "proper-vertex"
    for v in range(g.n):
        if labels[v] is None:
            return _fail(name, "incomplete", f"vertex {v} has no label", v)
    for u, v in g.edges:
        if labels[u] == labels[v]:
            return _fail(name, "violated",
                         f"edge ({u},{v}) is monochromatic with label {labels[u]}",
                         [u, v])
    return _ok(name)


def check_edge_properness(g: Graph, edge_labels) -> Verdict:
    """No two same-labeled edges may share an endpoint (None = uncolored)."""
    name = "proper-edge"
    for v in range(g.n):
        seen: dict[object, int] = {}
        for u in g.adjacency[v]:
            e = g.edge_id(v, u)
            lbl = edge_labels[e]
            if lbl is None:
                continue
            if lbl in seen:
                return _fail(name, "violated",
                             f"edges {seen[lbl]} and {e} share vertex {v} and label {lbl}",
                             [seen[lbl], e])
            seen[lbl] = e
    return _ok(name)


def check_domains_disjoint(g: Graph, dom: LabelDomain,
                           selection_budget: int = EXHAUSTIVE_SELECTION_BUDGET,
                           sample_seed: int = 0) -> Verdict:
    """Adjacent entities must hold disjoint label sets.

    On graphs with n <= 8 the structural condition is cross-validated against
    joint selections: exhaustively when the selection space fits the budget,
    otherwise by sampled selections.  Any selection of a disjoint system must
    be a proper labeling, and a violated system must admit an improper one.
    """
    name = "domains-disjoint"
    if dom.kind != "vertex":
        raise ValueError("disjointness check applies to vertex domains")
    for v in range(g.n):
        if not dom.domains.get(v):
            return _fail(name, "degenerate", f"vertex {v} has an empty domain", v)
    verdict = _ok(name)
    for u, v in g.edges:
        shared = dom.domains[u] & dom.domains[v]
        if shared:
            verdict = _fail(name, "violated",
                            f"vertices {u},{v} share label {min(shared)}", [u, v])
            break
    if g.n <= 8:
        sweep_proper = _selection_sweep(g, dom, selection_budget, sample_seed)
        if sweep_proper != verdict.ok:
            return _fail(name, "violated",
                         "structural verdict disagrees with joint-selection sweep",
                         {"structural": verdict.ok, "selections": sweep_proper})
    return verdict


def _selection_sweep(g: Graph, dom: LabelDomain, budget: int, sample_seed: int) -> bool:
    """True iff every tested joint selection is a proper labeling."""
    from itertools import product

    pools = [sorted(dom.domains[v]) for v in range(g.n)]
    space = 1
    for p in pools:
        space *= max(len(p), 1)
        if space > budget:
            break
    if space <= budget:
        picks = product(*pools)
    else:
        rng = derive_stream(subseed(sample_seed, 0x73656C), 0)
        picks = ([pool[rng.draw_uniform(len(pool))] for pool in pools]
                 for _ in range(SAMPLED_SELECTIONS))
    return all(check_proper_vertex(g, list(pick)).ok for pick in picks)


def check_edge_domains_disjoint(g: Graph, dom: LabelDomain) -> Verdict:
    """Edges sharing an endpoint must hold disjoint label sets."""
    name = "edge-domains-disjoint"
    if dom.kind != "edge":
        raise ValueError("edge disjointness check applies to edge domains")
    for e, d in dom.domains.items():
        if not d:
            return _fail(name, "degenerate", f"edge {e} has an empty domain", e)
    for v in range(g.n):
        incident = [g.edge_id(v, u) for u in g.adjacency[v]]
        incident = [e for e in incident if e in dom.domains]
        for i in range(len(incident)):
            for j in range(i + 1, len(incident)):
                shared = dom.domains[incident[i]] & dom.domains[incident[j]]
                if shared:
                    return _fail(name, "violated",
                                 f"edges {incident[i]},{incident[j]} share label "
                                 f"{min(shared)} at vertex {v}",
                                 [incident[i], incident[j]])
    return _ok(name)


def check_defective_labels(g: Graph, labels, p: int) -> tuple[Verdict, int]:
    """Each vertex may have at most p same-labeled neighbors; returns max defect."""
    name = "defective-labels"
    worst = 0
    witness = None
    for v in range(g.n):
        defect = sum(1 for u in g.adjacency[v] if labels[u] == labels[v])
        if defect > worst:
            worst, witness = defect, v
    if worst > p:
        return _fail(name, "violated",
                     f"vertex {witness} has {worst} same-labeled neighbors > p={p}",
                     witness), worst
    return _ok(name, f"max defect {worst}"), worst


def check_defective_domains(g: Graph, dom: LabelDomain, p: int) -> tuple[Verdict, int]:
    """Worst-case-selection defect: for every v and every x in D(v), at most
    p neighbors of v may hold x in their domains."""
    name = "defective-domains"
    worst = 0
    witness = None
    for v in range(g.n):
        own = dom.domains.get(v, frozenset())
        for x in own:
            cnt = sum(1 for u in g.adjacency[v] if x in dom.domains.get(u, frozenset()))
            if cnt > worst:
                worst, witness = cnt, (v, x)
    if worst > p:
        return _fail(name, "violated",
                     f"vertex {witness[0]} label {witness[1]} has defect {worst} > p={p}",
                     list(witness)), worst
    return _ok(name, f"max defect {worst}"), worst


def check_edge_defect(g: Graph, edge_labels, bound: int) -> tuple[Verdict, int]:
    """Per-edge defect: adjacent edges sharing the edge's label, at most bound."""
    name = "defective-edges"
    per_vertex: list[dict[object, int]] = []
    for v in range(g.n):
        counts: dict[object, int] = {}
        for u in g.adjacency[v]:
            lbl = edge_labels[g.edge_id(v, u)]
            counts[lbl] = counts.get(lbl, 0) + 1
        per_vertex.append(counts)
    worst = 0
    witness = None
    for e, (u, v) in enumerate(g.edges):
        lbl = edge_labels[e]
        defect = per_vertex[u][lbl] + per_vertex[v][lbl] - 2
        if defect > worst:
            worst, witness = defect, e
    if worst > bound:
        return _fail(name, "violated",
                     f"edge {witness} has defect {worst} > {bound}", witness), worst
    return _ok(name, f"max defect {worst}"), worst


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Join the sets of a and b; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def check_forest_labeling(g: Graph, edge_labels, assigner, label_count: int) -> Verdict:
    """Each label class must be acyclic and each vertex must give its
    assigned edges pairwise distinct labels in 1..label_count."""
    name = "forest-labeling"
    used: list[set[int]] = [set() for _ in range(g.n)]
    for e in range(g.m):
        lbl, v = edge_labels[e], assigner[e]
        if not 1 <= lbl <= label_count:
            return _fail(name, "violated",
                         f"edge {e} labeled {lbl} outside 1..{label_count}", e)
        if lbl in used[v]:
            return _fail(name, "violated",
                         f"vertex {v} assigned label {lbl} to two of its edges", v)
        used[v].add(lbl)
    for lbl in range(1, label_count + 1):
        uf = _UnionFind(g.n)
        for e, (u, v) in enumerate(g.edges):
            if edge_labels[e] == lbl and not uf.union(u, v):
                return _fail(name, "violated",
                             f"label class {lbl} contains a cycle through edge {e}", e)
    return _ok(name)


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = [source]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for u in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _holder_diameter(g: Graph, holders: list[int], bound: int) -> tuple[bool, int]:
    """(within_bound, measured_or_certified_diameter) for one label's holders.

    A single-source certificate (all holders within bound/2 of some holder)
    proves the pairwise bound; otherwise falls back to exact all-pairs BFS.
    The returned value is exact whenever the fallback ran, else an upper bound.
    """
    if len(holders) <= 1:
        return True, 0
    dist0 = _bfs_distances(g, holders[0])
    radii = [dist0[h] for h in holders]
    if all(d >= 0 for d in radii):
        r = max(radii)
        if 2 * r <= bound:
            return True, 2 * r
    worst = 0
    for h in holders:
        dist = _bfs_distances(g, h)
        for other in holders:
            d = dist[other]
            if d < 0:
                return False, -1  # disconnected holders: infinite diameter
            worst = max(worst, d)
    return worst <= bound, worst


def check_network_decomposition(g: Graph, dom: LabelDomain, diameter_bound: int,
                                label_budget: int) -> tuple[Verdict, dict]:
    """All holders of one cluster label must lie pairwise within the diameter
    bound, the distinct label count must fit the budget, and domains must share
    one uniform size."""
    name = "network-decomposition"
    sizes = {len(d) for d in dom.domains.values()}
    measured = {"max_weak_diameter": 0, "distinct_labels": 0}
    if len(sizes) > 1:
        return _fail(name, "violated", f"domain sizes not uniform: {sorted(sizes)}"), measured
    holders: dict[int, list[int]] = {}
    for v in sorted(dom.domains):
        for x in dom.domains[v]:
            holders.setdefault(x, []).append(v)
    measured["distinct_labels"] = len(holders)
    worst = 0
    for x, hs in holders.items():
        within, diam = _holder_diameter(g, hs, diameter_bound)
        if not within:
            return _fail(
                name, "violated",
                f"label {x} holders exceed weak diameter {diameter_bound}",
                x), measured
        worst = max(worst, diam)
    measured["max_weak_diameter"] = worst
    if len(holders) > label_budget:
        return _fail(name, "violated",
                     f"{len(holders)} distinct labels exceed budget {label_budget}"), measured
    return _ok(name, f"{len(holders)} labels, weak diameter <= {worst}"), measured


def check_edge_dominating(g: Graph, dominating) -> Verdict:
    """Every edge outside D must share an endpoint with an edge of D."""
    name = "edge-dominating"
    dominated = [False] * g.n
    dset = set(dominating)
    for e in dset:
        u, v = g.edges[e]
        dominated[u] = dominated[v] = True
    for e, (u, v) in enumerate(g.edges):
        if e not in dset and not (dominated[u] or dominated[v]):
            return _fail(name, "violated", f"edge {e}=({u},{v}) is undominated", e)
    return _ok(name)


def check_matching(g: Graph, matching) -> Verdict:
    """The edge set must be a matching and maximal w.r.t. edge addition."""
    name = "maximal-matching"
    covered = [False] * g.n
    for e in sorted(matching):
        u, v = g.edges[e]
        if covered[u] or covered[v]:
            return _fail(name, "violated", f"edge {e} collides inside the matching", e)
        covered[u] = covered[v] = True
    for e, (u, v) in enumerate(g.edges):
        if not covered[u] and not covered[v]:
            return _fail(name, "violated", f"edge {e}=({u},{v}) could still be added", e)
    return _ok(name)


@dataclass(frozen=True)
class MetricsReport:
    problem_domain_size: int
    solution_domain_min: int
    solution_domain_median: int
    solution_domain_max: int
    contingency_factor: Fraction
    rounds: int | None = None
    verdicts: tuple[Verdict, ...] = field(default=())

    @property
    def all_ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def to_document(self) -> dict:
        cf = self.contingency_factor
        return {
            "problem_domain_size": self.problem_domain_size,
            "solution_domain_min": self.solution_domain_min,
            "solution_domain_median": self.solution_domain_median,
            "solution_domain_max": self.solution_domain_max,
            "contingency_factor": f"{cf.numerator}/{cf.denominator}",
            "contingency_factor_float": float(cf) if cf is not None else None,
            "rounds": self.rounds,
            "verdicts": [v.to_document() for v in self.verdicts],
        }


def metrics(dom: LabelDomain, rounds: int | None = None,
            verdicts: tuple[Verdict, ...] = ()) -> MetricsReport:
    sizes = dom.sizes()
    if not sizes:
        return MetricsReport(dom.palette, 0, 0, 0, Fraction(0), rounds, tuple(verdicts))
    smallest = min(sizes)
    cf = Fraction(dom.palette, smallest) if smallest else Fraction(0)
    return MetricsReport(
        problem_domain_size=dom.palette,
        solution_domain_min=smallest,
        solution_domain_median=int(median_low(sizes)),
        solution_domain_max=max(sizes),
        contingency_factor=cf,
        rounds=rounds,
        verdicts=tuple(verdicts),
    )
