from fractions import Fraction

import pytest

from genlabel import GeneratorSpec, Graph, LabelDomain, generate
from genlabel.verify import (
    check_defective_domains,
    check_defective_labels,
    check_domains_disjoint,
    check_edge_defect,
    check_edge_dominating,
    check_edge_properness,
    check_forest_labeling,
    check_matching,
    check_network_decomposition,
    check_proper_vertex,
    metrics,
)


def vdom(palette, *sets, stride=1):
    return LabelDomain(kind="vertex", palette=palette, stride=stride,
                       domains={i: frozenset(s) for i, s in enumerate(sets)})


class TestProperVertex:
    def test_triangle_proper(self, triangle):
        assert check_proper_vertex(triangle, [0, 1, 2]).ok

    def test_triangle_improper_reports_edge(self, triangle):
        v = check_proper_vertex(triangle, [0, 0, 1])
        assert not v.ok and v.counterexample == [0, 1]

    def test_edgeless_constant(self):
        g = Graph.from_edges(3, [])
        assert check_proper_vertex(g, [5, 5, 5]).ok

    def test_missing_label_incomplete(self, triangle):
        v = check_proper_vertex(triangle, [0, None, 1])
        assert not v.ok and v.status == "incomplete"


class TestDisjoint:
    def test_disjoint_pair(self):
        g = Graph.from_edges(2, [(0, 1)])
        assert check_domains_disjoint(g, vdom(5, {1, 2}, {3, 4})).ok

    def test_overlapping_pair(self):
        g = Graph.from_edges(2, [(0, 1)])
        v = check_domains_disjoint(g, vdom(5, {1, 2}, {2, 3}))
        assert not v.ok and v.status == "violated"

    def test_empty_domain_degenerate(self):
        g = Graph.from_edges(2, [(0, 1)])
        v = check_domains_disjoint(g, vdom(5, {1}, set()))
        assert not v.ok and v.status == "degenerate"

    def test_exhaustive_sweep_on_path4(self, path4):
        dom = vdom(8, {0, 1}, {2, 3}, {4, 5}, {6, 7})
        assert check_domains_disjoint(path4, dom).ok  # sweeps all 2^4 picks


class TestDefective:
    def test_proper_coloring_defect_zero(self, triangle):
        verdict, worst = check_defective_labels(triangle, [0, 1, 2], 0)
        assert verdict.ok and worst == 0

    def test_monochromatic_k4(self, k4):
        verdict, worst = check_defective_labels(k4, [7, 7, 7, 7], 2)
        assert not verdict.ok and worst == 3

    def test_domains_mode(self, triangle):
        dom = vdom(4, {0, 1}, {1, 2}, {3})
        verdict, worst = check_defective_domains(triangle, dom, 1)
        assert verdict.ok and worst == 1
        verdict, _ = check_defective_domains(triangle, dom, 0)
        assert not verdict.ok


class TestEdgeCheckers:
    def test_star_proper_edges(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert check_edge_properness(g, [1, 2, 3]).ok
        assert not check_edge_properness(g, [1, 1, 2]).ok

    def test_partial_coloring_allowed(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert check_edge_properness(g, [1, None, 1]).ok is False
        assert check_edge_properness(g, [1, None, 2]).ok

    def test_dominating_p3_middle(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert check_edge_dominating(g, [1]).ok
        assert not check_edge_dominating(g, [0]).ok  # (2,3) undominated

    def test_edge_defect_counts(self, k4):
        verdict, worst = check_edge_defect(k4, [1, 1, 1, 1, 1, 1], 10)
        assert verdict.ok and worst == 4  # each K4 edge meets 4 others

    def test_matching_checker(self, path4):
        assert check_matching(path4, [0, 2]).ok
        assert not check_matching(path4, [0, 1]).ok  # shares vertex 1
        assert not check_matching(path4, [0]).ok  # edge 2 still addable


class TestForestChecker:
    def test_triangle_single_class_cycle(self, triangle):
        # assigners all distinct so only the class-1 cycle can trip the check
        v = check_forest_labeling(triangle, [1, 1, 1], [0, 2, 1], 1)
        assert not v.ok and "cycle" in v.detail

    def test_single_edge(self):
        g = Graph.from_edges(2, [(0, 1)])
        assert check_forest_labeling(g, [1], [0], 1).ok

    def test_duplicate_label_at_assigner(self):
        g = Graph.from_edges(3, [(0, 1), (0, 2)])
        v = check_forest_labeling(g, [1, 1], [0, 0], 2)
        assert not v.ok and "two of its edges" in v.detail


class TestNetworkDecomposition:
    def test_single_vertex(self):
        g = Graph.from_edges(1, [])
        dom = vdom(2, {0, 1})
        verdict, measured = check_network_decomposition(g, dom, 0, 2)
        assert verdict.ok and measured["distinct_labels"] == 2

    def test_far_vertices_sharing_label_fail(self):
        g = generate(GeneratorSpec("path", 10))
        domains = {v: frozenset({v, 100}) if v in (0, 9) else frozenset({v})
                   for v in range(10)}
        domains = {v: frozenset(list(domains[v])[:1]) for v in range(10)}
        domains[0] = frozenset({100})
        domains[9] = frozenset({100})
        dom = LabelDomain(kind="vertex", palette=101, domains=domains)
        verdict, _ = check_network_decomposition(g, dom, 4, 100)
        assert not verdict.ok

    def test_disconnected_holders_fail(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        dom = vdom(1, {0}, {0}, {0}, {0})
        verdict, _ = check_network_decomposition(g, dom, 100, 100)
        assert not verdict.ok

    def test_nonuniform_sizes_fail(self):
        g = Graph.from_edges(2, [(0, 1)])
        dom = vdom(4, {0, 1}, {2})
        verdict, _ = check_network_decomposition(g, dom, 2, 10)
        assert not verdict.ok


class TestMetrics:
    def test_simple_ratio(self):
        dom = vdom(9, {0, 1, 2}, {3, 4, 5, 6})
        rep = metrics(dom)
        assert rep.contingency_factor == Fraction(3)
        assert rep.solution_domain_min == 3
        assert rep.solution_domain_max == 4

    def test_forest_view_contingency_one(self):
        dom = LabelDomain(kind="edge", palette=3,
                          domains={e: frozenset({0, 1, 2}) for e in range(5)})
        assert metrics(dom).contingency_factor == 1

    def test_document_shape(self):
        rep = metrics(vdom(6, {0, 1}, {2, 3, 4}), rounds=2)
        doc = rep.to_document()
        assert doc["contingency_factor"] == "3/1"
        assert doc["rounds"] == 2


def test_checkers_do_not_import_algorithm_modules():
    """Dependency direction: the checker module must stay independent of the
    algorithm modules so it can serve as their oracle."""
    import ast

    import genlabel.verify as verify_mod

    tree = ast.parse(open(verify_mod.__file__).read())
    imported = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.Import):
            imported.update(alias.name for alias in node.names)
        elif isinstance(node, ast.ImportFrom):
            imported.add(node.module or "")
    banned = {"vertex_coloring", "decomposition", "edge_coloring", "runtime"}
    assert not {m.split(".")[-1] for m in imported} & banned
