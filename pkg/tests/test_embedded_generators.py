import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from islandpoly.graphs import EmbeddedGraph, Mode, Multigraph, bitset, \
    face_count
from islandpoly.graphs.generators import (cycle_graph, discrete_graph,
                                          from_networkx, one_vertex_torus,
                                          path_graph, planar_rotation_map,
                                          random_torus_graph, random_tree,
                                          star_graph, torus_cycle,
                                          torus_scaffold)
from islandpoly.utils import GraphError

from strategies import seeds, torus_graphs


class TestMarks:
    def test_everything_is_marked_by_default(self):
        eg = EmbeddedGraph.planar(path_graph(3))
        assert eg.mode == Mode.PLANAR
        assert eg.marked == (0, 1, 2)
        assert eg.marked_edges == frozenset({0, 1})
        assert eg.genus == 0 and eg.euler_characteristic == 2

    def test_marked_edges_need_marked_ends(self):
        with pytest.raises(GraphError, match='unmarked endpoint'):
            EmbeddedGraph(path_graph(3), None, bitset.from_members([0, 1]),
                          frozenset({1}))

    def test_map_must_match_the_graph(self):
        m = planar_rotation_map(cycle_graph(3))
        with pytest.raises(GraphError):
            EmbeddedGraph(cycle_graph(4), m)

    def test_unmarking_keeps_indices(self):
        eg = EmbeddedGraph.planar(cycle_graph(4))
        smaller = eg.unmark_vertices(0b0010)
        assert smaller.marked == (0, 2, 3)
        # Edges 0 (0-1) and 1 (1-2) go with vertex 1
        assert smaller.marked_edges == frozenset({2, 3})
        assert smaller.graph == eg.graph

        assert eg.unmark_edges([0]).marked_edges == frozenset({1, 2, 3})
        with pytest.raises(GraphError, match='not marked'):
            smaller.unmark_edges([0])

    def test_restrict_and_marked_graph(self):
        eg = EmbeddedGraph.planar(cycle_graph(5)).restrict(0b01011)
        assert eg.marked == (0, 1, 3)
        g = eg.marked_graph()
        assert g.labels == (0, 1, 3)
        assert [(e.id, e.u, e.v) for e in g.edges] == [(0, 0, 1)]

    def test_islands_of_rejects_unmarked_vertices(self):
        eg = EmbeddedGraph.planar(path_graph(3)).unmark_vertices(0b100)
        with pytest.raises(GraphError, match='not marked'):
            eg.islands_of(0b110)


class TestFaceCount:
    @pytest.mark.parametrize('g, faces', [
        (path_graph(4), 1),
        (cycle_graph(5), 2),
        (discrete_graph(3), 3),
        (Multigraph.from_edges(1, [(0, 0), (0, 0)]), 3),
    ])
    def test_planar(self, g, faces):
        eg = EmbeddedGraph.planar(g)
        assert face_count(eg, eg.marked_vertices) == faces

    def test_empty_subset(self):
        eg = EmbeddedGraph.planar(path_graph(2))
        assert face_count(eg, 0) == 0

    def test_torus_cycles(self):
        non_sep = torus_cycle(4)
        sep = torus_cycle(4, separating=True)
        assert non_sep.genus == sep.genus == 1
        assert face_count(non_sep, non_sep.marked_vertices) == 1
        assert face_count(sep, sep.marked_vertices) == 2
        # An arc never separates
        assert face_count(sep, 0b0011) == 1

    def test_torus_scaffold_keeps_planar_counts_of_trees(self):
        eg = torus_scaffold(planar_rotation_map(star_graph(4)))
        assert eg.genus == 1
        assert eg.vertex_count == 4
        assert face_count(eg, eg.marked_vertices) == 1

    def test_scaffolded_cycle_becomes_separating(self):
        eg = torus_scaffold(planar_rotation_map(cycle_graph(3)), vertex=1)
        assert eg.genus == 1
        assert face_count(eg, eg.marked_vertices) == 2


class TestGenerators:
    @given(st.integers(min_value=1, max_value=12), seeds)
    def test_random_trees_are_trees(self, n, seed):
        g = random_tree(n, random.Random(seed))
        assert g.vertex_count == n
        assert g.is_tree()

    def test_from_networkx_sorts_nodes(self):
        graph = nx.Graph([('b', 'c'), ('a', 'b')])
        g = from_networkx(graph)
        assert sorted((e.u, e.v) for e in g.edges) == [(0, 1), (1, 2)]

    def test_one_vertex_torus_host(self):
        m = one_vertex_torus()
        assert m.host.vertex_count == 1
        assert all(e.is_loop for e in m.host.edges)

    @given(torus_graphs(max_n=7))
    def test_random_torus_graphs(self, eg):
        assert eg.mode == Mode.SURFACE
        assert eg.genus == 1
        assert eg.vertex_count >= 1
        assert eg.graph.vertex_count <= 7

    def test_random_torus_graph_is_reproducible(self):
        first = random_torus_graph(5, random.Random(11))
        second = random_torus_graph(5, random.Random(11))
        assert first == second
