from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
import logging
from typing import NamedTuple

from . import bitset
from .bitset import VertexSubset
from .union_find import UnionFind
from ..utils import GraphError

_log = logging.getLogger(__name__)


class Edge(NamedTuple):
    id: int
    u: int
    v: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, vertex: int) -> int:
        """The endpoint opposite the given one (itself for a loop)."""
        return self.v if vertex == self.u else self.u


@dataclass(frozen=True)
class Multigraph:
    """
    A finite undirected multigraph. Self-loops and parallel edges are
    allowed; edges are told apart by id, not by their endpoints.

    Vertices are the indices 0..vertex_count-1. Graphs built with
    from_edges() number their edges 0..e-1; induced subgraphs keep the ids
    of the graph they came from, and record the original index of each of
    their vertices in `labels`.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.vertex_count:
            raise GraphError(attr='vertex_count',
                             msg=f'{self.vertex_count} is negative')

        # Accept plain tuples as well as Edge instances
        edges = tuple(Edge(*e) for e in self.edges)
        object.__setattr__(self, 'edges', edges)

        seen = set()
        for e in edges:
            if e.id in seen:
                raise GraphError(attr='edge', msg=f'duplicate edge id {e.id}')
            seen.add(e.id)
            for end in (e.u, e.v):
                if not 0 <= end < self.vertex_count:
                    raise GraphError(
                        attr='edge',
                        msg=f'edge {e.id} has endpoint {end} outside '
                            f'0..{self.vertex_count - 1}'
                    )

        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise GraphError(attr='labels',
                             msg='there must be one label per vertex')

    @classmethod
    def from_edges(cls,
                   vertex_count: int,
                   pairs: Iterable[tuple[int, int]]) -> Multigraph:
        """
        Build a graph whose edges get the ids 0, 1, 2, ... in order.

        Args:
            vertex_count: The number of vertices.
            pairs: The (u, v) endpoints of each edge.

        Returns:
            Multigraph: The new graph.
        """

        return cls(vertex_count,
                   tuple(Edge(i, u, v) for i, (u, v) in enumerate(pairs)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    def edge(self, edge_id: int) -> Edge:
        """
        Get an edge by id.

        Raises:
            GraphError: If there is no such edge.
        """

        try:
            return self._by_id[edge_id]
        except KeyError:
            raise GraphError(attr='edge',
                             msg=f'there is no edge with id {edge_id}')

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._by_id

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    def next_edge_id(self) -> int:
        """An id that is not used by any edge yet."""
        return max(self._by_id, default=-1) + 1

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise GraphError(attr='vertex',
                             msg=f'{v} is not a vertex of a graph with '
                                 f'{self.vertex_count} vertices')

    def check_subset(self, s: int) -> None:
        if s < 0 or s >> self.vertex_count:
            raise GraphError(
                attr='subset',
                msg=f'{bitset.members(s)} is not a subset of '
                    f'0..{self.vertex_count - 1}'
            )

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """
        Packed neighbour subsets, one per vertex. Self-loops don't make a
        vertex its own neighbour.
        """

        adj = [0] * self.vertex_count
        for e in self.edges:
            if not e.is_loop:
                adj[e.u] |= 1 << e.v
                adj[e.v] |= 1 << e.u
        return tuple(adj)

    def degree(self, v: int) -> int:
        """The valency of a vertex, with self-loops counting twice."""

        self.check_vertex(v)
        return sum((e.u == v) + (e.v == v) for e in self.edges)

    def edges_between(self, u: int, v: int) -> list[Edge]:
        return [e for e in self.edges if {e.u, e.v} == {u, v}]

    def is_connected(self) -> bool:
        return len(islands(self)) <= 1

    def is_forest(self) -> bool:
        return self.edge_count == self.vertex_count - len(islands(self))

    def is_tree(self) -> bool:
        return self.vertex_count >= 1 and self.is_connected() and \
            self.is_forest()

    def is_simple(self) -> bool:
        """Whether the graph has neither self-loops nor parallel edges."""

        pairs = set()
        for e in self.edges:
            if e.is_loop:
                return False
            pair = (min(e.u, e.v), max(e.u, e.v))
            if pair in pairs:
                return False
            pairs.add(pair)
        return True

    def delete_edges(self, edge_ids: Iterable[int]) -> Multigraph:
        """
        Remove edges, keeping every vertex and the ids of the other edges.

        Raises:
            GraphError: If an id doesn't exist.
        """

        drop = set(edge_ids)
        for i in drop:
            self.edge(i)
        return Multigraph(self.vertex_count,
                          tuple(e for e in self.edges if e.id not in drop),
                          self.labels)

    def delete_vertices(self, s: int) -> Multigraph:
        """
        Remove a set of vertices and their edges. The remaining vertices are
        renumbered in order; edge ids are kept.

        Args:
            s: The packed subset of vertices to remove.

        Returns:
            Multigraph: The induced subgraph on the other vertices.
        """

        self.check_subset(s)
        return induced(self, bitset.full(self.vertex_count) & ~s)

    def original_label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v]


@dataclass(frozen=True)
class Island:
    vertices: VertexSubset
    edge_ids: frozenset[int]

    @property
    def vertex_count(self) -> int:
        return bitset.popcount(self.vertices)


@dataclass(frozen=True)
class IslandDecomposition:
    """
    The connected components of a graph, ordered by their smallest vertex.
    """

    islands: tuple[Island, ...]

    def __len__(self) -> int:
        return len(self.islands)

    def __iter__(self) -> Iterator[Island]:
        return iter(self.islands)

    def __getitem__(self, i: int) -> Island:
        return self.islands[i]


def induced(g: Multigraph, s: int) -> Multigraph:
    """
    Get the subgraph induced on a vertex subset: exactly the edges of g with
    both endpoints in s, self-loops at members included.

    The i-th vertex of the result is the i-th smallest member of s, and its
    label is the label of that vertex in g. Edge ids are preserved.

    Args:
        g: The graph.
        s: The packed vertex subset.

    Returns:
        Multigraph: The induced subgraph.

    Raises:
        GraphError: If s contains an index outside g.
    """

    g.check_subset(s)
    kept = bitset.members(s)
    index = {v: i for i, v in enumerate(kept)}
    edges = tuple(
        Edge(e.id, index[e.u], index[e.v])
        for e in g.edges if e.u in index and e.v in index
    )
    labels = tuple(g.original_label(v) for v in kept)
    return Multigraph(len(kept), edges, labels)


def islands(g: Multigraph) -> IslandDecomposition:
    """
    Decompose a graph into its connected components with union-find over
    the edges. Isolated vertices are islands of their own.

    Args:
        g: The graph.

    Returns:
        IslandDecomposition: One island per component.
    """

    uf = UnionFind(g.vertex_count)
    for e in g.edges:
        uf.union(e.u, e.v)

    root_to_index = {}
    vertex_sets: list[int] = []
    edge_sets: list[set[int]] = []
    for v in range(g.vertex_count):
        root = uf.find_parent(v)
        if root not in root_to_index:
            root_to_index[root] = len(vertex_sets)
            vertex_sets.append(0)
            edge_sets.append(set())
        vertex_sets[root_to_index[root]] |= 1 << v

    for e in g.edges:
        edge_sets[root_to_index[uf.find_parent(e.u)]].add(e.id)

    return IslandDecomposition(tuple(
        Island(VertexSubset(vs), frozenset(es))
        for vs, es in zip(vertex_sets, edge_sets)
    ))
