import networkx as nx
import pytest
from hypothesis import given, strategies as st

from islandpoly.graphs import Multigraph, UnionFind, bitset, induced, \
    islands
from islandpoly.graphs.generators import (complete_graph, cycle_graph,
                                          path_graph, to_networkx)
from islandpoly.utils import GraphError

from strategies import planar_graphs


class TestBitset:
    def test_pack_and_unpack(self):
        s = bitset.from_members([5, 0, 3, 3])
        assert s == 0b101001
        assert bitset.members(s) == [0, 3, 5]
        assert bitset.popcount(s) == 3
        assert bitset.contains(s, 3) and not bitset.contains(s, 4)
        assert bitset.full(4) == 0b1111

    @pytest.mark.parametrize('bad', [-1, 64])
    def test_invalid_members(self, bad):
        with pytest.raises(GraphError):
            bitset.from_members([bad])

    def test_subsets_of_size(self):
        universe = bitset.from_members([1, 2, 4])
        assert list(bitset.iter_subsets_of_size(universe, 2)) == \
            [0b110, 0b10010, 0b10100]

    @given(st.integers(min_value=0, max_value=2 ** 10 - 1))
    def test_submasks_are_every_subset_in_order(self, universe):
        subs = list(bitset.iter_submasks(universe))
        assert subs == sorted(subs)
        assert len(subs) == 2 ** bitset.popcount(universe)
        assert all(s & ~universe == 0 for s in subs)

    def test_scatter(self):
        assert bitset.scatter(0b101, (2, 4, 7)) == (1 << 2) | (1 << 7)


class TestUnionFind:
    def test_components(self):
        uf = UnionFind(6)
        assert uf.union(0, 1)
        assert uf.union(1, 2)
        assert not uf.union(2, 0)
        uf.union_all([3, 5])
        assert uf.num_components == 3
        assert sorted(uf.retrieve_components()) == [[0, 1, 2], [3, 5], [4]]

    def test_smaller_tree_goes_under_the_taller(self):
        uf = UnionFind(4)
        uf.union(0, 1)
        uf.union(2, 0)
        assert uf.find_parent(2) == uf.find_parent(1) == 0
        assert uf.ranks[0] == 1

        # Equal ranks grow the surviving root by one
        uf = UnionFind(4)
        uf.union(0, 1)
        uf.union(2, 3)
        uf.union(1, 3)
        assert uf.find_parent(3) == 0
        assert uf.ranks[0] == 2
        assert uf.num_components == 1


class TestMultigraph:
    def test_loops_and_parallel_edges(self):
        g = Multigraph.from_edges(2, [(0, 1), (0, 1), (1, 1)])
        assert not g.is_simple()
        assert g.degree(1) == 4
        assert [e.id for e in g.edges_between(0, 1)] == [0, 1]
        assert g.adjacency == (0b10, 0b01)
        assert g.next_edge_id() == 3

    @pytest.mark.parametrize('edges', [
        [(0, 0, 1), (0, 1, 2)],
        [(0, 0, 3)],
    ])
    def test_invalid_edges(self, edges):
        with pytest.raises(GraphError):
            Multigraph(3, tuple(edges))

    def test_missing_edge(self):
        with pytest.raises(GraphError, match='no edge'):
            path_graph(3).edge(5)

    def test_trees_and_forests(self):
        assert path_graph(4).is_tree()
        assert not cycle_graph(4).is_tree()
        assert Multigraph(3).is_forest() and not Multigraph(3).is_tree()
        assert Multigraph(1).is_tree()

    def test_induced_keeps_ids_and_labels(self):
        g = cycle_graph(5)
        h = induced(g, bitset.from_members([1, 2, 4]))
        assert h.vertex_count == 3
        assert h.labels == (1, 2, 4)
        # Only edge 1 (1-2) survives
        assert [(e.id, e.u, e.v) for e in h.edges] == [(1, 0, 1)]

        again = induced(h, 0b110)
        assert again.labels == (2, 4)
        assert again.edge_count == 0

    def test_delete(self):
        g = complete_graph(4)
        assert g.delete_edges([0, 5]).edge_ids == (1, 2, 3, 4)
        h = g.delete_vertices(0b0001)
        assert h.vertex_count == 3
        assert h.edge_count == 3
        with pytest.raises(GraphError):
            g.delete_edges([9])

    def test_islands_order_by_smallest_vertex(self):
        g = Multigraph.from_edges(5, [(3, 4), (0, 2), (2, 2)])
        parts = islands(g)
        assert [bitset.members(i.vertices) for i in parts] == \
            [[0, 2], [1], [3, 4]]
        assert parts[0].edge_ids == frozenset({1, 2})

    @given(planar_graphs(max_n=8))
    def test_islands_match_networkx(self, eg):
        g = eg.graph
        ours = sorted(bitset.members(i.vertices) for i in islands(g))
        theirs = sorted(sorted(c) for c in
                        nx.connected_components(to_networkx(g)))
        assert ours == theirs
