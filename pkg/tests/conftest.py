"""Shared fixtures: a small zoo of graphs used across the suite."""

from __future__ import annotations

import pytest

from genlabel import GeneratorSpec, Graph, generate


@pytest.fixture
def k4() -> Graph:
    return generate(GeneratorSpec("clique", 4))


@pytest.fixture
def triangle() -> Graph:
    return generate(GeneratorSpec("clique", 3))


@pytest.fixture
def path4() -> Graph:
    return generate(GeneratorSpec("path", 4))


@pytest.fixture
def star4() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


def all_graphs_upto(n_max: int, m_max: int | None = None):
    """Every graph on a fixed vertex set of size <= n_max (edge subsets of K_n)."""
    from itertools import combinations

    pairs = list(combinations(range(n_max), 2))
    limit = len(pairs) if m_max is None else min(m_max, len(pairs))
    for m in range(limit + 1):
        for subset in combinations(pairs, m):
            yield Graph.from_edges(n_max, subset)
