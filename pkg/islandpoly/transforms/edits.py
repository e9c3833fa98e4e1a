"""
Local edits of embedded graphs. Every edit returns a new EmbeddedGraph; in
surface mode the host map is rebuilt (and so re-validated) with the new
darts spliced into the rotations.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import NamedTuple

from ..graphs import bitset
from ..graphs.bitset import VertexSubset
from ..graphs.embedded import EmbeddedGraph
from ..graphs.multigraph import Edge, Multigraph
from ..graphs.rotation_map import RotationMap, dart_of
from ..utils import MapError, SIDE_A, SIDE_B, TransformError

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class InsertionSpec:
    """
    Where the two darts of a new edge go. `first` is the index in the first
    vertex's rotation at which the side-a dart is inserted; `second` is the
    index in the second vertex's rotation for the side-b dart. For a loop
    both refer to the same vertex and `second` is counted after the first
    dart has been inserted.
    """

    first: int
    second: int


class Relabeling(NamedTuple):
    """How indices change under a contraction."""

    vertex_map: tuple[int, ...]
    edge_map: dict[int, int | None]


def _rotations(eg: EmbeddedGraph) -> list[list[int]]:
    return [list(r) for r in eg.surface.rotations]


def _splice(rotations: list[list[int]],
            vertex: int,
            position: int,
            dart: int) -> None:
    rot = rotations[vertex]
    if not 0 <= position <= len(rot):
        raise TransformError(
            attr='position',
            msg=f'position {position} is outside 0..{len(rot)} at vertex '
                f'{vertex}'
        )
    rot.insert(position, dart)


def _rebuild(eg: EmbeddedGraph,
             graph: Multigraph,
             rotations: list[list[int]] | None,
             marked_vertices: int,
             marked_edges: frozenset[int]) -> EmbeddedGraph:
    surface = None
    if rotations is not None:
        surface = RotationMap(graph, tuple(tuple(r) for r in rotations))
    return EmbeddedGraph(graph, surface, VertexSubset(marked_vertices),
                         marked_edges)


def add_edge(eg: EmbeddedGraph,
             u: int,
             v: int,
             ins: InsertionSpec | None = None,
             mark: bool = True) -> EmbeddedGraph:
    """
    Add an edge between two existing vertices (u == v gives a loop). In
    surface mode the darts are spliced at `ins`, or by default into a face
    both vertices share so the genus doesn't change.

    Args:
        eg: The graph.
        u: The first endpoint, which gets the side-a dart.
        v: The second endpoint.
        ins: Splice positions. Ignored in planar mode.
        mark: Whether the new edge belongs to the graph under study, or is
        only scaffold. Defaults to True.

    Returns:
        EmbeddedGraph: The graph with the new edge, whose id is
        eg.graph.next_edge_id().

    Raises:
        TransformError: On bad positions, or if no shared face exists.
    """

    g = eg.graph
    g.check_vertex(u)
    g.check_vertex(v)
    new_id = g.next_edge_id()
    graph = Multigraph(g.vertex_count, g.edges + (Edge(new_id, u, v),),
                       g.labels)

    rotations = None
    if eg.surface is not None:
        if ins is None:
            try:
                ins = InsertionSpec(*eg.surface.common_corner(u, v))
            except MapError as e:
                raise TransformError(attr='insertion', msg=e.msg) from e
        rotations = _rotations(eg)
        _splice(rotations, u, ins.first, dart_of(new_id, SIDE_A))
        _splice(rotations, v, ins.second, dart_of(new_id, SIDE_B))

    marked = eg.marked_edges | {new_id} if mark else eg.marked_edges
    return _rebuild(eg, graph, rotations, eg.marked_vertices, marked)


def add_self_loop(eg: EmbeddedGraph,
                  v: int,
                  ins: InsertionSpec | None = None) -> EmbeddedGraph:
    """
    Add a marked loop at a marked vertex.

    In surface mode, where the two darts are spliced decides whether the
    loop bounds a disk, separates the surface, or runs around a handle. The
    default puts them next to each other, giving a loop around an empty
    disk.

    Args:
        eg: The graph.
        v: The vertex.
        ins: Splice positions at v. Ignored in planar mode.

    Returns:
        EmbeddedGraph: The graph with the loop.
    """

    eg.check_marked(v)
    result = add_edge(eg, v, v, ins)
    _log.debug(f'Added loop {eg.graph.next_edge_id()} at vertex {v}')
    return result


def add_parallel_edge(eg: EmbeddedGraph,
                      v1: int,
                      v2: int,
                      ins: InsertionSpec | None = None) -> EmbeddedGraph:
    """
    Add a marked edge between two distinct marked vertices. When they are
    already adjacent this is a similar adjacency; otherwise it's a plain
    short circuit.

    Args:
        eg: The graph.
        v1: The first endpoint.
        v2: The second endpoint.
        ins: Splice positions at v1 and v2. Ignored in planar mode.

    Returns:
        EmbeddedGraph: The graph with the new edge.

    Raises:
        TransformError: If v1 == v2.
    """

    if v1 == v2:
        raise TransformError(attr='vertices',
                             msg='both endpoints are the same vertex; add a '
                                 'self-loop instead')
    eg.check_marked(v1)
    eg.check_marked(v2)
    return add_edge(eg, v1, v2, ins)


def add_appendix(eg: EmbeddedGraph,
                 v: int,
                 position: int = 0) -> EmbeddedGraph:
    """
    Attach a new pendant vertex to a marked vertex by a new marked edge.

    Args:
        eg: The graph.
        v: The vertex to attach to.
        position: Splice position of the new dart at v, in surface mode.
        Defaults to 0.

    Returns:
        EmbeddedGraph: The graph with the appendix. The new vertex is the
        last vertex of the host.
    """

    eg.check_marked(v)
    g = eg.graph
    w = g.vertex_count
    new_id = g.next_edge_id()
    labels = None if g.labels is None else g.labels + (w,)
    graph = Multigraph(w + 1, g.edges + (Edge(new_id, v, w),), labels)

    rotations = None
    if eg.surface is not None:
        rotations = _rotations(eg)
        _splice(rotations, v, position, dart_of(new_id, SIDE_A))
        rotations.append([dart_of(new_id, SIDE_B)])

    return _rebuild(eg, graph, rotations, eg.marked_vertices | 1 << w,
                    eg.marked_edges | {new_id})


def subdivide(eg: EmbeddedGraph, edge_id: int) -> EmbeddedGraph:
    """
    Insert a new degree-2 vertex w into a marked edge e = (u, v), loops
    included. Edge e becomes (u, w) and keeps its id; the new edge (w, v)
    gets the next id. Faces and genus are unchanged.

    Args:
        eg: The graph.
        edge_id: The marked edge.

    Returns:
        EmbeddedGraph: The subdivided graph.
    """

    e = eg.check_marked_edge(edge_id)
    g = eg.graph
    w = g.vertex_count
    new_id = g.next_edge_id()
    edges = tuple(Edge(e.id, e.u, w) if x.id == e.id else x for x in g.edges)
    labels = None if g.labels is None else g.labels + (w,)
    graph = Multigraph(w + 1, edges + (Edge(new_id, w, e.v),), labels)

    rotations = None
    if eg.surface is not None:
        rotations = _rotations(eg)
        old_b = dart_of(e.id, SIDE_B)
        rot_v = rotations[e.v]
        rot_v[rot_v.index(old_b)] = dart_of(new_id, SIDE_B)
        rotations.append([old_b, dart_of(new_id, SIDE_A)])

    _log.debug(f'Subdivided edge {edge_id} with new vertex {w}')
    return _rebuild(eg, graph, rotations, eg.marked_vertices | 1 << w,
                    eg.marked_edges | {new_id})


def contraction_relabeling(eg: EmbeddedGraph, edge_id: int) -> Relabeling:
    """
    The index changes made by contract(): the edge's first endpoint merges
    into its second, later vertices and edges move down by one.

    Args:
        eg: The graph.
        edge_id: The edge to contract.

    Returns:
        Relabeling: Old vertex index to new, and old edge id to new (None
        for the contracted edge).
    """

    e = eg.graph.edge(edge_id)
    v, w = e.u, e.v

    def shift(x: int) -> int:
        return x - (x > v)

    vertex_map = tuple(shift(w) if x == v else shift(x)
                       for x in range(eg.graph.vertex_count))
    edge_map = {i: (None if i == edge_id else i - (i > edge_id))
                for i in eg.graph.edge_ids}
    return Relabeling(vertex_map, edge_map)


def contract(eg: EmbeddedGraph, edge_id: int) -> EmbeddedGraph:
    """
    Contract a marked edge e = (v, w) with v != w. The merged vertex keeps
    w's identity; in surface mode v's darts take the place of e's dart in
    w's rotation, in their cyclic order starting after e's dart at v. This
    keeps the faces and the genus.

    Args:
        eg: The graph.
        edge_id: The marked edge.

    Returns:
        EmbeddedGraph: The contracted graph, renumbered as described by
        contraction_relabeling().

    Raises:
        TransformError: If the edge is a loop.
    """

    e = eg.check_marked_edge(edge_id)
    if e.is_loop:
        raise TransformError(attr='edge',
                             msg=f'edge {edge_id} is a self-loop and can '
                                 "not be contracted")

    g = eg.graph
    relabel = contraction_relabeling(eg, edge_id)
    vmap, emap = relabel.vertex_map, relabel.edge_map

    edges = tuple(Edge(emap[x.id], vmap[x.u], vmap[x.v])
                  for x in g.edges if x.id != edge_id)
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[x] for x in range(g.vertex_count)
                       if x != e.u)
    graph = Multigraph(g.vertex_count - 1, edges, labels)

    rotations = None
    if eg.surface is not None:
        d_v, d_w = dart_of(edge_id, SIDE_A), dart_of(edge_id, SIDE_B)
        rot_v = list(eg.surface.rotations[e.u])
        rot_w = list(eg.surface.rotations[e.v])
        i = rot_v.index(d_v)
        after_v = rot_v[i + 1:] + rot_v[:i]
        j = rot_w.index(d_w)
        merged = rot_w[:j] + after_v + rot_w[j + 1:]

        def renumber(d: int) -> int:
            return dart_of(emap[d >> 1], d & 1)

        rotations = []
        for x, rot in enumerate(eg.surface.rotations):
            if x == e.u:
                continue
            source = merged if x == e.v else rot
            rotations.append([renumber(d) for d in source])

    marked_vertices = bitset.from_members(
        vmap[x] for x in bitset.members(eg.marked_vertices)
    )
    marked_edges = frozenset(emap[i] for i in eg.marked_edges
                             if i != edge_id)

    _log.debug(f'Contracted edge {edge_id}: vertex {e.u} merged into {e.v}')
    return _rebuild(eg, graph, rotations, marked_vertices, marked_edges)


def delete_edge(eg: EmbeddedGraph, edge_id: int) -> EmbeddedGraph:
    """Remove a marked edge from the graph under study (Γ - e)."""
    return eg.unmark_edges([edge_id])


def delete_vertices(eg: EmbeddedGraph, *vertices: int) -> EmbeddedGraph:
    """Remove marked vertices and their edges from the graph under study."""

    for v in vertices:
        eg.check_marked(v)
    return eg.unmark_vertices(bitset.from_members(vertices))


def short_circuit(eg: EmbeddedGraph,
                  edge_id: int,
                  subdivisions: int = 0) -> EmbeddedGraph:
    """
    Replicate a marked non-loop edge by a similar adjacency and subdivide
    the copy `subdivisions` times, so the copy becomes a clean path. In
    surface mode the copy runs right alongside the edge, bounding an empty
    bigon with it.

    Args:
        eg: The graph.
        edge_id: The edge to replicate.
        subdivisions: How many times to subdivide the copy. Defaults to 0.

    Returns:
        EmbeddedGraph: The new graph.
    """

    e = eg.check_marked_edge(edge_id)
    if e.is_loop:
        raise TransformError(attr='edge',
                             msg=f'edge {edge_id} is a self-loop')
    if subdivisions < 0:
        raise TransformError(attr='subdivisions',
                             msg='the subdivision count is negative')

    ins = None
    if eg.surface is not None:
        m = eg.surface
        ins = InsertionSpec(
            m.dart_position[dart_of(edge_id, SIDE_A)],
            m.dart_position[dart_of(edge_id, SIDE_B)] + 1
        )

    copy_id = eg.graph.next_edge_id()
    result = add_parallel_edge(eg, e.u, e.v, ins)
    # Each subdivision leaves the copy's id on the u side, so the remaining
    # piece next to v is always the newest edge
    last = copy_id
    for _ in range(subdivisions):
        next_id = result.graph.next_edge_id()
        result = subdivide(result, last)
        last = next_id
    return result
