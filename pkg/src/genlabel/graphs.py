"""Simple undirected graphs with dense ids, generators, orientations, line graphs.

Vertices are 0..n-1.  Edges are canonical pairs (u, v) with u < v, listed in
lexicographic order; the position of an edge in that list is its dense edge
index (a bijection onto 0..m-1).  Graphs are immutable after construction and
safe to share read-only across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .rng import derive_stream, subseed

GENERATOR_KINDS = ("clique", "path", "random-tree", "gnp", "forest-union")


class EdgeListError(ValueError):
    """Malformed edge-list input."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    edge_index: dict[tuple[int, int], int] = field(repr=False, compare=False)

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Build a graph from unordered pairs; duplicates collapse, loops rejected."""
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
        edge_list = tuple(sorted(canon))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edge_list:
            adj[u].append(v)
            adj[v].append(u)
        adjacency = tuple(tuple(sorted(a)) for a in adj)
        index = {e: i for i, e in enumerate(edge_list)}
        return Graph(n=n, edges=edge_list, adjacency=adjacency, edge_index=index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index


def load_edge_list(text: str) -> Graph:
    """Parse a line-oriented edge list.

    Each non-comment line is "u v".  An optional header "p <n> <m>" fixes the
    vertex count; without it, n = max id + 1.  Lines starting with '#' or 'c'
    are comments.  Duplicate edges collapse; self-loops and out-of-range ids
    are rejected with their line number.
    """
    n_declared = None
    pairs: list[tuple[int, int]] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 3:
                raise EdgeListError(f"line {lineno}: malformed header {line!r}")
            n_declared = int(parts[1])
            continue
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise EdgeListError(f"line {lineno}: non-integer vertex id in {line!r}") from exc
        if u < 0 or v < 0:
            raise EdgeListError(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at vertex {u}")
        if n_declared is not None and (u >= n_declared or v >= n_declared):
            raise EdgeListError(
                f"line {lineno}: vertex id out of range for declared n={n_declared}"
            )
        pairs.append((u, v))
        max_id = max(max_id, u, v)
    n = n_declared if n_declared is not None else max_id + 1
    return Graph.from_edges(n, pairs)


def dump_edge_list(g: Graph) -> str:
    """Serialize to the canonical header + sorted "u v" lines form.

    ``load_edge_list(dump_edge_list(g))`` reproduces ``g`` and the round trip
    is byte-exact for canonical inputs.
    """
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int
    p: float | None = None
    a: int | None = None
    max_deg: int | None = None  # degree cap, random-tree only
    seed: int = 0

    def validate(self) -> None:
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if self.kind == "gnp":
            if self.p is None or not (0.0 <= self.p <= 1.0):
                raise ValueError(f"gnp requires p in [0,1], got {self.p}")
        if self.kind == "forest-union":
            if self.a is None or self.a < 1:
                raise ValueError(f"forest-union requires a >= 1, got {self.a}")
        if self.max_deg is not None and (self.kind != "random-tree" or self.max_deg < 2):
            raise ValueError("max_deg applies to random-tree only and must be >= 2")


def generate(spec: GeneratorSpec) -> Graph:
    """Deterministic graph generation; same spec, same graph."""
    spec.validate()
    n = spec.n
    if spec.kind == "clique":
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if spec.kind == "path":
        return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])
    if spec.kind == "random-tree":
        rng = derive_stream(subseed(spec.seed, 0x7265), 0)
        cap = spec.max_deg
        degree = [0] * max(n, 1)
        edges = []
        for v in range(1, n):
            u = rng.draw_uniform(v)
            # average degree below 2 guarantees an under-cap vertex exists
            while cap is not None and degree[u] >= cap:
                u = rng.draw_uniform(v)
            edges.append((v, u))
            degree[u] += 1
            degree[v] += 1
        return Graph.from_edges(n, edges)
    if spec.kind == "gnp":
        return _gnp(n, spec.p or 0.0, spec.seed)
    g, _parts = forest_union_parts(spec)
    return g


def _gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p) by geometric skipping over lexicographic pair indices."""
    if p <= 0.0 or n < 2:
        return Graph.from_edges(n, [])
    if p >= 1.0:
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    rng = derive_stream(subseed(seed, 0x676E70), 0)
    log_q = math.log1p(-p)
    total = n * (n - 1) // 2
    edges = []
    idx = -1

    def offset(u: int) -> int:  # pairs in rows before u
        return u * (2 * n - u - 1) // 2

    while True:
        r = rng.draw_float()
        idx += 1 + int(math.log(1.0 - r) / log_q)
        if idx >= total:
            break
        # invert lexicographic pair index -> (u, v) via the row quadratic
        u = (2 * n - 1 - math.isqrt((2 * n - 1) ** 2 - 8 * idx)) // 2
        while offset(u + 1) <= idx:
            u += 1
        while offset(u) > idx:
            u -= 1
        edges.append((u, u + 1 + idx - offset(u)))
    return Graph.from_edges(n, edges)


def forest_union_parts(spec: GeneratorSpec) -> tuple[Graph, tuple[tuple[tuple[int, int], ...], ...]]:
    """Union of ``a`` random matchings, returned with the generating forests.

    Each part is a perfect matching drawn from a random pairing (one vertex
    unmatched when n is odd), so each part is trivially a forest and the union
    has arboricity <= a and maximum degree <= a by construction.
    """
    spec.validate()
    if spec.kind != "forest-union":
        raise ValueError(f"forest_union_parts needs kind='forest-union', got {spec.kind!r}")
    n, a = spec.n, spec.a or 1
    parts = []
    edges: list[tuple[int, int]] = []
    for j in range(a):
        rng = derive_stream(subseed(spec.seed, 0x6675, j), 0)
        order = rng.permutation(n)
        matching = []
        for t in range(0, n - 1, 2):
            u, v = order[t], order[t + 1]
            matching.append((u, v) if u < v else (v, u))
        parts.append(tuple(sorted(matching)))
        edges.extend(matching)
    return Graph.from_edges(n, edges), tuple(parts)


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge; ``target[e]`` is the endpoint edge e points to.

    Out-edges point from a vertex toward its parents (the classic oriented-tree
    convention: a vertex has an out-edge to each parent).
    """

    graph: Graph
    target: tuple[int, ...]
    acyclic: bool
    _out: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @staticmethod
    def from_targets(g: Graph, target, acyclic: bool) -> "Orientation":
        out: list[list[int]] = [[] for _ in range(g.n)]
        for e, (u, v) in enumerate(g.edges):
            head = target[e]
            if head not in (u, v):
                raise ValueError(f"edge {e} target {head} is not an endpoint")
            out[u + v - head].append(e)
        return Orientation(
            graph=g, target=tuple(target), acyclic=acyclic,
            _out=tuple(tuple(o) for o in out),
        )

    def source(self, e: int) -> int:
        u, v = self.graph.edges[e]
        return u + v - self.target[e]

    def out_edges(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self.target[e] for e in self._out[v])

    @property
    def max_out_degree(self) -> int:
        return max((len(o) for o in self._out), default=0)


def orient_by_id(g: Graph) -> Orientation:
    """Orient every edge toward its higher-id endpoint (always acyclic)."""
    return Orientation.from_targets(g, [v for _, v in g.edges], acyclic=True)


def orient_forest(g: Graph) -> Orientation:
    """Orient a forest toward BFS parents, rooting each component at its min id.

    Raises ValueError if the graph contains a cycle.  Every non-root vertex
    gets exactly one out-edge (to its parent); roots get none.
    """
    parent = [-1] * g.n
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    queue.append(u)
                elif u != parent[v]:
                    raise ValueError("graph is not a forest: cycle detected")
    target = []
    for u, v in g.edges:
        if parent[u] == v:
            target.append(v)
        elif parent[v] == u:
            target.append(u)
        else:  # unreachable on a forest
            raise ValueError("graph is not a forest: non-tree edge")
    return Orientation.from_targets(g, target, acyclic=True)


def line_graph(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """The line graph L(G) plus the edge-of-G -> vertex-of-L(G) mapping.

    Vertex j of L(G) is edge j of G (the mapping is the identity on dense
    edge indices, returned explicitly).  Two L-vertices are adjacent iff the
    corresponding edges share an endpoint, so deg_L(e) = deg(u)+deg(v)-2.
    """
    l_edges = []
    for v in range(g.n):
        incident = [g.edge_id(v, u) for u in g.adjacency[v]]
        for i in range(len(incident)):
            for j in range(i + 1, len(incident)):
                a, b = incident[i], incident[j]
                l_edges.append((a, b) if a < b else (b, a))
    return Graph.from_edges(g.m, l_edges), tuple(range(g.m))


def log_star(n: float) -> int:
    """Iterated base-2 logarithm: applications of log2 until the value is <= 2."""
    count = 0
    x = float(n)
    while x > 2.0:
        x = math.log2(x)
        count += 1
    return count
