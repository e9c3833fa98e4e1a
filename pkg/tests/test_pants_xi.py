import pytest
from hypothesis import assume, given, strategies as st

from islandpoly.analysis import pants_diff, pants_graphs, s_counts, xi_poly
from islandpoly.beta import beta_total
from islandpoly.graphs import EmbeddedGraph, Multigraph
from islandpoly.graphs.generators import discrete_graph, path_graph
from islandpoly.poly import IntPoly
from islandpoly.transforms import add_parallel_edge, delete_edge
from islandpoly.utils import GraphError

from strategies import planar_graphs, simple_planar_graphs


class TestPants:
    def test_s_counts_on_a_path(self):
        g = path_graph(3)
        assert s_counts(g, 0, 2) == (0, 0, 0, 1)
        assert s_counts(g, 0, 1) == (0, 0, 1, 1)
        assert s_counts(discrete_graph(3), 0, 1) == (0, 0, 0, 0)

    def test_s_count_errors(self):
        with pytest.raises(GraphError, match='distinct'):
            s_counts(path_graph(3), 1, 1)
        with pytest.raises(GraphError):
            s_counts(path_graph(3), 0, 3)

    def test_bridges(self):
        built = pants_graphs(path_graph(4), 0, 1, 2, 3)
        assert built.middle_one == built.middle_two == (4, 5)
        one = built.type_one.graph
        assert one.vertex_count == 6
        assert one.edge_count == 3 + 5
        assert sorted((e.u, e.v) for e in one.edges[3:]) == \
            [(0, 4), (1, 4), (4, 5), (5, 2), (5, 3)]

    def test_difference_on_a_path(self):
        g = path_graph(4)
        built = pants_graphs(g, 0, 1, 2, 3)
        diff = beta_total(built.type_one) - beta_total(built.type_two)
        assert pants_diff(g, 0, 1, 2, 3) == diff == IntPoly.monomial(4, 2)

    def test_no_difference_without_edges(self):
        assert pants_diff(discrete_graph(4), 0, 1, 2, 3).is_zero()

    @given(simple_planar_graphs(min_n=4, max_n=8), st.data())
    def test_difference_matches_enumeration(self, g, data):
        ends = data.draw(st.permutations(range(g.vertex_count)))[:4]
        built = pants_graphs(g, *ends)
        assert pants_diff(g, *ends) == \
            beta_total(built.type_one) - beta_total(built.type_two)

    def test_ends_must_be_distinct(self):
        with pytest.raises(GraphError, match='distinct'):
            pants_graphs(path_graph(4), 0, 1, 1, 3)


class TestXi:
    def test_parallel_edge(self):
        eg = EmbeddedGraph.planar(Multigraph.from_edges(2, [(0, 1), (0, 1)]))
        assert xi_poly(eg, 0, 1, 1) == IntPoly.of(0, 1)
        assert beta_total(eg) == IntPoly.of(2, 2)

    @given(planar_graphs(max_n=5), st.data())
    def test_parallel_edges_only_gain(self, eg, data):
        edges = [e for e in eg.marked_edge_list if not e.is_loop]
        assume(edges)
        e = data.draw(st.sampled_from(edges))
        new = add_parallel_edge(eg, e.u, e.v)
        copy = new.graph.edge_count - 1
        assert beta_total(new) == \
            beta_total(delete_edge(new, copy)) + xi_poly(new, e.u, e.v, copy)

    def test_loops(self):
        eg = EmbeddedGraph.planar(Multigraph.from_edges(2, [(0, 1), (1, 1)]))
        # Every subset holding vertex 1 gains a face
        assert xi_poly(eg, 1, 1, 1) == IntPoly.of(1, 1)

    def test_wrong_ends(self):
        eg = EmbeddedGraph.planar(path_graph(3))
        with pytest.raises(GraphError, match='does not join'):
            xi_poly(eg, 0, 2, 0)
        with pytest.raises(GraphError):
            xi_poly(eg, 0, 1, 5)
