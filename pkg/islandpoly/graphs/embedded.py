from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
import logging

from . import bitset
from .bitset import VertexSubset
from .multigraph import Edge, Island, IslandDecomposition, Multigraph
from .rotation_map import RotationMap, complement_components
from .union_find import UnionFind
from ..utils import GraphError

_log = logging.getLogger(__name__)


class Mode(Enum):
    PLANAR = 'planar'
    SURFACE = 'surface'

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f'Mode.{self.name}'


@dataclass(frozen=True)
class EmbeddedGraph:
    """
    The graph under study. In planar mode this is a plain multigraph and
    faces follow from Euler's formula. In surface mode it is a marked
    subgraph of a cellular host map; unmarked host edges and vertices are
    scaffold that only shapes the surface.

    Both modes carry marks, so that deleting a vertex or an edge never
    renumbers anything: it just unmarks it.
    """

    graph: Multigraph
    surface: RotationMap | None = None
    marked_vertices: VertexSubset | None = None
    marked_edges: frozenset[int] | None = None

    def __post_init__(self):
        if self.surface is not None and self.surface.host != self.graph:
            raise GraphError(attr='graph',
                             msg='the graph must be the host of the map')

        if self.marked_vertices is None:
            object.__setattr__(self, 'marked_vertices',
                               bitset.full(self.graph.vertex_count))
        if self.marked_edges is None:
            object.__setattr__(self, 'marked_edges',
                               frozenset(self.graph.edge_ids))
        else:
            object.__setattr__(self, 'marked_edges',
                               frozenset(self.marked_edges))

        self.graph.check_subset(self.marked_vertices)
        for eid in self.marked_edges:
            e = self.graph.edge(eid)
            for end in (e.u, e.v):
                if not self.marked_vertices >> end & 1:
                    raise GraphError(
                        attr='marks',
                        msg=f'marked edge {eid} has unmarked endpoint {end}'
                    )

    @classmethod
    def planar(cls, g: Multigraph) -> EmbeddedGraph:
        return cls(g)

    @classmethod
    def on_surface(cls,
                   m: RotationMap,
                   vertices: Iterable[int] | None = None,
                   edges: Iterable[int] | None = None) -> EmbeddedGraph:
        """
        Mark a subgraph of a host map.

        Args:
            m: The host map.
            vertices: The marked vertices. Defaults to all.
            edges: The marked edges. Defaults to all.

        Returns:
            EmbeddedGraph: The surface-mode graph.
        """

        return cls(
            m.host, m,
            None if vertices is None else bitset.from_members(vertices),
            None if edges is None else frozenset(edges)
        )

    @property
    def mode(self) -> Mode:
        return Mode.PLANAR if self.surface is None else Mode.SURFACE

    @cached_property
    def marked(self) -> tuple[int, ...]:
        """The marked vertices in increasing order."""
        return tuple(bitset.members(self.marked_vertices))

    @property
    def vertex_count(self) -> int:
        """The number of marked vertices, n in every formula."""
        return len(self.marked)

    @cached_property
    def marked_edge_list(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.graph.edges if e.id in self.marked_edges)

    @property
    def genus(self) -> int:
        return 0 if self.surface is None else self.surface.genus

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus

    def marked_graph(self) -> Multigraph:
        """
        The marked subgraph as a standalone graph, renumbered in order of
        the marked vertices; labels hold the host indices, edge ids are kept.
        """

        index = {v: i for i, v in enumerate(self.marked)}
        return Multigraph(
            len(self.marked),
            tuple(Edge(e.id, index[e.u], index[e.v])
                  for e in self.marked_edge_list),
            self.marked
        )

    def check_marked(self, v: int) -> None:
        self.graph.check_vertex(v)
        if not self.marked_vertices >> v & 1:
            raise GraphError(attr='vertex', msg=f'vertex {v} is not marked')

    def check_marked_edge(self, edge_id: int) -> Edge:
        e = self.graph.edge(edge_id)
        if edge_id not in self.marked_edges:
            raise GraphError(attr='edge', msg=f'edge {edge_id} is not marked')
        return e

    def unmark_vertices(self, s: int) -> EmbeddedGraph:
        """
        Remove vertices (and the marked edges at them) from the graph under
        study, leaving the host as it is.

        Args:
            s: Packed subset of vertices. Unmarked members are ignored.

        Returns:
            EmbeddedGraph: The graph minus those vertices.
        """

        self.graph.check_subset(s)
        edges = frozenset(
            e.id for e in self.marked_edge_list
            if not (s >> e.u & 1 or s >> e.v & 1)
        )
        return EmbeddedGraph(self.graph, self.surface,
                             VertexSubset(self.marked_vertices & ~s), edges)

    def unmark_edges(self, edge_ids: Iterable[int]) -> EmbeddedGraph:
        """Remove marked edges from the graph under study."""

        drop = set(edge_ids)
        for eid in drop:
            self.check_marked_edge(eid)
        return EmbeddedGraph(self.graph, self.surface, self.marked_vertices,
                             self.marked_edges - drop)

    def restrict(self, s: int) -> EmbeddedGraph:
        """The induced marked subgraph on the marked members of s."""
        return self.unmark_vertices(self.marked_vertices & ~s)

    def islands_of(self, s: int) -> IslandDecomposition:
        """
        The islands of the marked subgraph induced on s, in host indices.

        Raises:
            GraphError: If s contains an unmarked vertex.
        """

        if s & ~self.marked_vertices or s < 0:
            raise GraphError(
                attr='subset',
                msg=f'{bitset.members(s & ~self.marked_vertices)} are not '
                    'marked vertices'
            )

        local = bitset.members(s)
        index = {v: i for i, v in enumerate(local)}
        inside = [e for e in self.marked_edge_list
                  if e.u in index and e.v in index]
        uf = UnionFind(len(local))
        for e in inside:
            uf.union(index[e.u], index[e.v])

        components = uf.retrieve_components()
        root_to_index = {uf.find_parent(c[0]): i
                         for i, c in enumerate(components)}
        edge_sets: list[set[int]] = [set() for _ in components]
        for e in inside:
            edge_sets[root_to_index[uf.find_parent(index[e.u])]].add(e.id)

        return IslandDecomposition(tuple(
            Island(bitset.from_members(local[i] for i in c),
                   frozenset(edges))
            for c, edges in zip(components, edge_sets)
        ))


def face_count(eg: EmbeddedGraph, s: int) -> int:
    """
    The island boundary count of the marked subgraph induced on s: the sum
    over its islands of the number of components of the surface minus that
    island alone. In planar mode each island contributes e - v + 2.

    Args:
        eg: The embedded graph.
        s: Packed subset of marked vertices.

    Returns:
        int: The face count. 0 for the empty subset.

    Raises:
        GraphError: If s contains an unmarked vertex.
    """

    decomposition = eg.islands_of(s)
    if eg.surface is None:
        return sum(len(i.edge_ids) - i.vertex_count + 2
                   for i in decomposition)
    return sum(complement_components(eg.surface, i) for i in decomposition)
