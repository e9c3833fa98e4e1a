"""
Joining two embedded graphs into one: disjoint union, bridge and wedge sum.
"""

from __future__ import annotations

from enum import Enum
import logging
from typing import NamedTuple

from .edits import InsertionSpec, _splice, contract, contraction_relabeling
from ..graphs.embedded import EmbeddedGraph
from ..graphs.multigraph import Edge, Multigraph
from ..graphs.rotation_map import RotationMap, dart_of
from ..utils import SIDE_A, SIDE_B, TransformError

_log = logging.getLogger(__name__)


class CombineKind(Enum):
    DISJOINT = 'disjoint'
    BRIDGE = 'bridge'
    WEDGE = 'wedge'

    def __str__(self) -> str:
        return self.value


class Combination(NamedTuple):
    """
    The combined graph, with the new index of every host vertex of each
    operand. A wedge maps both attach vertices to the same index.
    """

    graph: EmbeddedGraph
    first_map: tuple[int, ...]
    second_map: tuple[int, ...]


def _face_corner(m: RotationMap, face: int) -> tuple[int, int]:
    if not 0 <= face < m.face_count:
        raise TransformError(attr='face',
                             msg=f'there is no face {face}; the map has '
                                 f'{m.face_count}')
    for v in range(m.host.vertex_count):
        corners = m.corners_in_face(v, face)
        if corners:
            return v, corners[0]
    raise TransformError(attr='face', msg=f'face {face} has no corner')


def combine(kind: CombineKind | str,
            eg1: EmbeddedGraph,
            eg2: EmbeddedGraph,
            v1: int | None = None,
            v2: int | None = None,
            ins: InsertionSpec | None = None,
            face1: int = 0,
            face2: int = 0) -> Combination:
    """
    Combine two embedded graphs. The second graph's host vertices and edges
    come after the first's.

    In surface mode the result lives on the connected sum of the two
    surfaces. For a disjoint union the hosts are joined by an unmarked
    scaffold edge between a corner of face1 and a corner of face2. A bridge
    is a marked edge from v1 to v2, spliced at the positions in `ins`
    (default 0 and 0). A wedge is a bridge followed by contracting it; the
    merged vertex keeps v2's identity.

    Args:
        kind: disjoint, bridge or wedge.
        eg1: The first graph.
        eg2: The second graph.
        v1: The attach vertex in eg1, for bridge and wedge.
        v2: The attach vertex in eg2, for bridge and wedge.
        ins: Splice positions at v1 and v2, in surface mode.
        face1: The face of eg1 that receives eg2, for a surface disjoint
        union.
        face2: The face of eg2 that receives eg1, likewise.

    Returns:
        Combination: The graph and the vertex maps.

    Raises:
        TransformError: If the modes differ, the attach vertices are
        missing or invalid, or a face doesn't exist.
    """

    kind = CombineKind(kind)
    if eg1.mode != eg2.mode:
        raise TransformError(attr='mode',
                             msg=f"can't combine a {eg1.mode} graph with a "
                                 f'{eg2.mode} graph')

    if kind == CombineKind.DISJOINT:
        if v1 is not None or v2 is not None:
            raise TransformError(attr='vertices',
                                 msg='a disjoint union takes no attach '
                                     'vertices')
    else:
        if v1 is None or v2 is None:
            raise TransformError(attr='vertices',
                                 msg=f'a {kind} needs one attach vertex on '
                                     'each side')
        eg1.check_marked(v1)
        eg2.check_marked(v2)

    g1, g2 = eg1.graph, eg2.graph
    n1 = g1.vertex_count
    e1 = g1.next_edge_id()
    edges = list(g1.edges) + [Edge(e.id + e1, e.u + n1, e.v + n1)
                              for e in g2.edges]
    marked_vertices = eg1.marked_vertices | eg2.marked_vertices << n1
    marked_edges = set(eg1.marked_edges) | {i + e1 for i in eg2.marked_edges}

    rotations = None
    if eg1.surface is not None:
        rotations = [list(r) for r in eg1.surface.rotations] + \
                    [[d + 2 * e1 for d in r] for r in eg2.surface.rotations]

    # The joining edge, if any
    join_id = e1 + g2.next_edge_id()
    if kind == CombineKind.DISJOINT:
        if rotations is not None:
            u, pu = _face_corner(eg1.surface, face1)
            w, pw = _face_corner(eg2.surface, face2)
            edges.append(Edge(join_id, u, w + n1))
            _splice(rotations, u, pu, dart_of(join_id, SIDE_A))
            _splice(rotations, w + n1, pw, dart_of(join_id, SIDE_B))
    else:
        edges.append(Edge(join_id, v1, v2 + n1))
        marked_edges.add(join_id)
        if rotations is not None:
            ins = InsertionSpec(0, 0) if ins is None else ins
            _splice(rotations, v1, ins.first, dart_of(join_id, SIDE_A))
            _splice(rotations, v2 + n1, ins.second,
                    dart_of(join_id, SIDE_B))

    graph = Multigraph(n1 + g2.vertex_count, tuple(edges))
    surface = None
    if rotations is not None:
        surface = RotationMap(graph, tuple(tuple(r) for r in rotations))
    result = EmbeddedGraph(graph, surface, marked_vertices,
                           frozenset(marked_edges))

    first_map = tuple(range(n1))
    second_map = tuple(range(n1, n1 + g2.vertex_count))
    if kind == CombineKind.WEDGE:
        vmap = contraction_relabeling(result, join_id).vertex_map
        result = contract(result, join_id)
        first_map = tuple(vmap[x] for x in first_map)
        second_map = tuple(vmap[x] for x in second_map)

    _log.debug(f'Combined graphs on {eg1.vertex_count} and '
               f'{eg2.vertex_count} vertices: {kind} ({eg1.mode})')
    return Combination(result, first_map, second_map)
