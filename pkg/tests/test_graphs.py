import itertools
import json
import re

import networkx as nx
import pytest

from transvect.f2core import SymplecticSpace, VectorSet, unit, vec_to_str
from transvect.graphs import (
    EdgeLabeledTree,
    NotATreeError,
    SimpleGraph,
    all_graphs,
    block_decomposition,
    classical_conditions,
    from_adjacency_json,
    graph_isomorphic,
    graph_of_set,
    is_block_graph,
    is_claw_free,
    is_claw_free_block_graph,
    is_path_graph,
    line_graph,
    maximal_cliques,
    reconstruct_root_tree,
    to_adjacency_json,
    to_dot,
)
from transvect.harness import counterexample_instance


def _edges(g):
    return {frozenset(e) for e in g.edges}


class TestGraphOfSet:
    def test_path_basis_gives_path(self):
        for n in range(1, 7):
            sp = SymplecticSpace.path_form(n)
            assert is_path_graph(graph_of_set(sp, VectorSet.standard_basis(sp)))

    def test_counterexample_edges(self):
        sp, vs = counterexample_instance(3)
        # members: e1, e2, e3, e1+e2 -> indices 0..3
        g = graph_of_set(sp, vs)
        assert _edges(g) == {
            frozenset(p) for p in [(0, 1), (1, 2), (3, 0), (3, 1), (3, 2)]
        }
        assert not g.has_edge(0, 2)

    def test_singleton(self):
        sp = SymplecticSpace.path_form(3)
        g = graph_of_set(sp, VectorSet(sp, [unit(2)]))
        assert len(g) == 1 and not g.edges


class TestBlocks:
    def test_path(self):
        bd = block_decomposition(SimpleGraph.path(5))
        assert len(bd.blocks) == 4 and all(len(b) == 2 for b in bd.blocks)
        assert bd.cut_vertices == {1, 2, 3}

    def test_triangle(self):
        bd = block_decomposition(SimpleGraph.complete(3))
        assert bd.blocks == (frozenset({0, 1, 2}),)
        assert bd.cut_vertices == frozenset()

    def test_counterexample_n5(self):
        sp, vs = counterexample_instance(5)
        bd = block_decomposition(graph_of_set(sp, vs))
        # indices: 0..4 = e1..e5, 5 = e1+e2
        assert set(bd.blocks) == {frozenset({0, 1, 2, 5}), frozenset({2, 3}), frozenset({3, 4})}
        assert bd.cut_vertices == {2, 3}

    def test_isolated_vertices_are_blocks(self):
        bd = block_decomposition(SimpleGraph(range(3), [(0, 1)]))
        assert frozenset({2}) in bd.blocks


class TestPredicates:
    def test_claw(self):
        assert not is_claw_free(SimpleGraph.star(3))

    def test_counterexample_claw_free_not_block(self):
        for n in range(3, 7):
            g = graph_of_set(*counterexample_instance(n))
            assert is_claw_free(g)
            assert not is_block_graph(g)

    def test_complete(self):
        for n in range(1, 7):
            assert is_claw_free(SimpleGraph.complete(n))
            assert is_claw_free_block_graph(SimpleGraph.complete(n))

    def test_path(self):
        g = SimpleGraph.path(5)
        assert is_block_graph(g) and is_claw_free_block_graph(g)

    def test_disconnected_not_block_graph(self):
        assert not is_block_graph(SimpleGraph(range(4), [(0, 1), (2, 3)]))

    def test_claw_free_matches_brute_force(self, oracle):
        for n in range(1, 6):
            for g in all_graphs(n):
                es = [tuple(e) for e in g.edges]
                assert is_claw_free(g) == oracle.claw_free(list(g.vertices), es)

    def test_block_graph_matches_networkx_definition(self):
        # a block graph is connected and chordal with no induced diamond
        diamond = nx.Graph([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
        for n in range(1, 6):
            for g in all_graphs(n, connected_only=True):
                h = g.to_networkx()
                has_diamond = any(
                    nx.is_isomorphic(h.subgraph(c), diamond) for c in itertools.combinations(h.nodes, 4)
                )
                assert is_block_graph(g) == (nx.is_chordal(h) and not has_diamond)


class TestClassicalConditions:
    def test_path(self):
        assert classical_conditions(SimpleGraph.path(4)).as_tuple() == (True, True, True, True)

    def test_counterexample(self):
        g = graph_of_set(*counterexample_instance(3))
        assert classical_conditions(g).as_tuple() == (True, True, False, True)

    def test_claw(self):
        # blocks of the claw are its three edges; they pairwise share the
        # centre, so the intersection graph on blocks is a triangle
        c = classical_conditions(SimpleGraph.star(3))
        assert (c.connected, c.at_most_two_components, c.blocks_complete) == (True, False, True)
        assert c.block_intersection_tree is False


class TestLineGraphs:
    def test_path(self):
        for n in range(2, 7):
            assert graph_isomorphic(line_graph(SimpleGraph.path(n + 1)), SimpleGraph.path(n))

    def test_star(self):
        assert graph_isomorphic(line_graph(SimpleGraph.star(3)), SimpleGraph.complete(3))

    def test_edge(self):
        lg = line_graph(SimpleGraph.path(2))
        assert len(lg) == 1 and not lg.edges

    def test_not_a_tree(self):
        with pytest.raises(NotATreeError):
            line_graph(SimpleGraph.complete(3))

    def test_agrees_with_networkx(self):
        for n in range(2, 8):
            for t in nx.nonisomorphic_trees(n):
                g = SimpleGraph(t.nodes, t.edges)
                assert nx.is_isomorphic(line_graph(g).to_networkx(), nx.line_graph(t))


class TestRootTree:
    def test_path(self):
        for n in range(1, 7):
            root = reconstruct_root_tree(SimpleGraph.path(n))
            assert root is not None
            assert is_path_graph(root.tree) and len(root.tree) == n + 1

    def test_triangle(self):
        root = reconstruct_root_tree(SimpleGraph.complete(3))
        assert graph_isomorphic(root.tree, SimpleGraph.star(3))

    def test_counterexample(self):
        assert reconstruct_root_tree(graph_of_set(*counterexample_instance(3))) is None

    def test_claw(self):
        assert reconstruct_root_tree(SimpleGraph.star(3)) is None

    def test_labels_are_input_vertices(self):
        g = SimpleGraph("abcd", [("a", "b"), ("b", "c"), ("b", "d"), ("c", "d")])
        root = reconstruct_root_tree(g)
        assert sorted(root.labels.values()) == list("abcd")
        assert root.line_graph() == g

    def test_maximal_cliques(self):
        g = SimpleGraph.path(4)
        assert sorted(map(sorted, maximal_cliques(g))) == [[0, 1], [1, 2], [2, 3]]


class TestIsomorphism:
    def test_self(self):
        g = graph_of_set(*counterexample_instance(4))
        assert graph_isomorphic(g, g)

    def test_p3_is_k12(self):
        assert graph_isomorphic(SimpleGraph.path(3), SimpleGraph.star(2))

    def test_p4_not_k13(self):
        assert not graph_isomorphic(SimpleGraph.path(4), SimpleGraph.star(3))

    def test_matches_networkx(self):
        graphs5 = list(all_graphs(5))[::37]
        for g1, g2 in itertools.combinations(graphs5, 2):
            assert graph_isomorphic(g1, g2) == nx.is_isomorphic(g1.to_networkx(), g2.to_networkx())


class TestEdgeLabeledTree:
    def test_rejects_repeated_labels(self):
        with pytest.raises(ValueError):
            EdgeLabeledTree(SimpleGraph.path(3), {frozenset({0, 1}): 1, frozenset({1, 2}): 1})

    def test_rejects_non_tree(self):
        with pytest.raises(ValueError):
            EdgeLabeledTree(SimpleGraph.complete(3), {e: i + 1 for i, e in enumerate(SimpleGraph.complete(3).edges)})

    def test_pendants(self):
        t = EdgeLabeledTree(SimpleGraph.path(3), {frozenset({0, 1}): "a", frozenset({1, 2}): "b"})
        assert sorted(t.pendant_labels()) == ["a", "b"]
        assert sorted(t.incident_labels(1)) == ["a", "b"]


def test_all_graphs_counts():
    assert [sum(1 for _ in all_graphs(n)) for n in range(1, 6)] == [1, 2, 8, 64, 1024]
    # connected labelled graphs, OEIS A001187
    assert [sum(1 for _ in all_graphs(n, connected_only=True)) for n in range(1, 6)] == [1, 1, 4, 38, 728]


class TestSerialization:
    def test_dot_structure(self):
        sp, vs = counterexample_instance(3)
        g = graph_of_set(sp, vs).relabel(dict(enumerate(vs.members)))
        text = to_dot(g, dim=3)
        assert text.count("{") == text.count("}") == 1
        assert text.startswith("graph G {")
        nodes = dict(re.findall(r'(n\d+) \[label="([01]+)"\];', text))
        declared = {frozenset((nodes[a], nodes[b])) for a, b in re.findall(r"(n\d+) -- (n\d+);", text)}
        expected = {frozenset(vec_to_str(v, 3) for v in e) for e in g.edges}
        assert declared == expected

    def test_dot_statements_terminated(self):
        text = to_dot(SimpleGraph.path(3))
        # every statement line ends with ';' except the braces
        body = text.strip().splitlines()[1:-1]
        assert all(line.strip().endswith(";") for line in body)

    def test_adjacency_roundtrip(self):
        for g in list(all_graphs(4))[::5]:
            named = g.relabel({v: str(v) for v in g.vertices})
            assert from_adjacency_json(to_adjacency_json(named)) == named

    def test_adjacency_asymmetric_rejected(self):
        text = json.dumps({"vertices": ["a", "b"], "adjacency": {"a": ["b"], "b": []}})
        with pytest.raises(ValueError):
            from_adjacency_json(text)
