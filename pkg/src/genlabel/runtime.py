"""Deterministic synchronous round engine for message-passing node programs.

Round model: every round, each non-halted node receives the messages sent to
it in the previous round, performs unmetered local computation (its step may
consult only its own state, inbox, and private randomness stream), and sends
arbitrarily large messages to any subset of neighbors, possibly a distinct
payload per neighbor.  A halted node never steps or sends again; messages
addressed to it are silently dropped.

Accounting: ``rounds`` counts rounds in which at least one message was
delivered or a node executed a non-halted step; ``comm_rounds`` counts only
rounds with at least one delivery (the communication rounds of the classic
synchronous model, in which "compute and send" and "receive" of the same
message batch fall in consecutive engine rounds).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .graphs import Graph
from .rng import Stream, derive_stream


class NodeContext:
    """Static per-node view: own id, neighbor ids, global constants, private RNG."""

    __slots__ = ("node", "neighbors", "n", "max_degree", "rng")

    def __init__(self, node: int, neighbors: tuple[int, ...], n: int,
                 max_degree: int, rng: Stream):
        self.node = node
        self.neighbors = neighbors
        self.n = n
        self.max_degree = max_degree
        self.rng = rng

    @property
    def degree(self) -> int:
        return len(self.neighbors)


class NodeProgram:
    """Base class for per-node programs run by ``run_sync``.

    Subclasses implement ``init``, ``step`` and ``output``.  ``step`` returns
    ``(state, outbox, halted)`` where outbox is a list of (neighbor, payload)
    pairs; it must be a pure function of (state, inbox, ctx.rng).
    """

    def init(self, ctx: NodeContext):
        raise NotImplementedError

    def step(self, ctx: NodeContext, state, inbox: list[tuple[int, object]]):
        raise NotImplementedError

    def output(self, ctx: NodeContext, state):
        return state


@dataclass(frozen=True)
class RunReport:
    rounds: int
    comm_rounds: int
    messages_total: int
    outputs: tuple
    seed: int
    incomplete: bool = False
    wall_seconds: float | None = field(default=None, compare=False)

    def to_document(self) -> dict:
        """Stable, timing-free form used by the byte-determinism contract."""
        return {
            "rounds": self.rounds,
            "comm_rounds": self.comm_rounds,
            "messages_total": self.messages_total,
            "seed": self.seed,
            "incomplete": self.incomplete,
        }


def run_sync(program: NodeProgram, g: Graph, master_seed: int,
             max_rounds: int = 10_000, trace: list | None = None) -> RunReport:
    """Run a node program in lock-step rounds until all nodes halt.

    Deterministic: identical (program, graph, master_seed) produce identical
    reports.  If the round budget runs out first, the report is flagged
    incomplete and carries whatever outputs the nodes have so far.
    """
    t0 = time.perf_counter()
    n = g.n
    if n == 0:
        return RunReport(rounds=0, comm_rounds=0, messages_total=0, outputs=(),
                         seed=master_seed, wall_seconds=time.perf_counter() - t0)
    adjacency = g.adjacency
    max_deg = g.max_degree
    ctxs = [NodeContext(v, adjacency[v], n, max_deg, derive_stream(master_seed, v))
            for v in range(n)]
    states = [program.init(ctxs[v]) for v in range(n)]
    halted = [False] * n
    live = n
    inboxes: list[list] = [[] for _ in range(n)]
    rounds = comm_rounds = messages = 0
    step = program.step
    while live > 0 and rounds < max_rounds:
        delivered = any(inboxes[v] for v in range(n) if not halted[v])
        next_inboxes: list[list] = [[] for _ in range(n)]
        for v in range(n):
            if halted[v]:
                continue
            state, outbox, halt = step(ctxs[v], states[v], inboxes[v])
            states[v] = state
            if outbox:
                for u, payload in outbox:
                    next_inboxes[u].append((v, payload))
                    if trace is not None:
                        trace.append((rounds, v, u, payload))
                messages += len(outbox)
            if halt:
                halted[v] = True
                live -= 1
        inboxes = next_inboxes
        rounds += 1
        comm_rounds += int(delivered)
    outputs = tuple(program.output(ctxs[v], states[v]) for v in range(n))
    return RunReport(rounds=rounds, comm_rounds=comm_rounds, messages_total=messages,
                     outputs=outputs, seed=master_seed, incomplete=live > 0,
                     wall_seconds=time.perf_counter() - t0)
