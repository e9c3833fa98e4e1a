"""
Oriented combinatorial maps given by rotation systems.

Every edge contributes two darts, numbered 2 * edge_id (side 'a', at the
edge's u endpoint) and 2 * edge_id + 1 (side 'b', at its v endpoint), so the
twin of a dart is dart ^ 1. Each vertex lists its darts in counterclockwise
order. Faces are the orbits of

    next(d) = rotation successor of twin(d)

and the genus follows from v - e + f = 2 - 2g.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property
import logging
from typing import NamedTuple

from .multigraph import Island, Multigraph, islands
from .union_find import UnionFind
from . import bitset
from ..utils import SIDE_NAMES, IslandError, MapError, list_to_str

_log = logging.getLogger(__name__)


def dart_of(edge_id: int, side: int) -> int:
    return 2 * edge_id + side


def twin(dart: int) -> int:
    return dart ^ 1


def dart_edge(dart: int) -> int:
    return dart >> 1


def dart_name(dart: int) -> str:
    """The text form of a dart, such as '3a' or '3b'."""
    return f'{dart >> 1}{SIDE_NAMES[dart & 1]}'


@dataclass(frozen=True)
class FaceStructure:
    """
    The faces of a map. Face ids are numbered in the order their smallest
    dart is found, so they are deterministic for a given map.
    """

    face_count: int
    dart_faces: tuple[int, ...]
    vertex_faces: tuple[frozenset[int], ...]
    orbits: tuple[tuple[int, ...], ...]


class TraceResult(NamedTuple):
    faces: FaceStructure
    genus: int


@dataclass(frozen=True)
class RotationMap:
    """
    A connected host graph together with the counterclockwise cyclic order of
    darts at each vertex. The host's edge ids must be 0..e-1.
    """

    host: Multigraph
    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rotations = tuple(tuple(r) for r in self.rotations)
        object.__setattr__(self, 'rotations', rotations)
        _validate_structure(self.host, rotations)

    @cached_property
    def dart_position(self) -> tuple[int, ...]:
        out = [0] * (2 * self.host.edge_count)
        for rot in self.rotations:
            for i, d in enumerate(rot):
                out[d] = i
        return tuple(out)

    @cached_property
    def rotation_successor(self) -> tuple[int, ...]:
        out = [0] * (2 * self.host.edge_count)
        for rot in self.rotations:
            for i, d in enumerate(rot):
                out[d] = rot[(i + 1) % len(rot)]
        return tuple(out)

    @cached_property
    def faces(self) -> FaceStructure:
        """Trace the face orbits. Computed once per map."""

        dart_count = 2 * self.host.edge_count
        succ = self.rotation_successor

        # A lone vertex without darts is a sphere with one face
        if dart_count == 0:
            return FaceStructure(1, (), (frozenset({0}),), ((),))

        dart_faces = [-1] * dart_count
        orbits = []
        for start in range(dart_count):
            if dart_faces[start] != -1:
                continue
            orbit = []
            d = start
            while dart_faces[d] == -1:
                dart_faces[d] = len(orbits)
                orbit.append(d)
                d = succ[twin(d)]
            orbits.append(tuple(orbit))

        vertex_faces = tuple(
            frozenset(dart_faces[d] for d in rot) for rot in self.rotations
        )
        return FaceStructure(len(orbits), tuple(dart_faces),
                             vertex_faces, tuple(orbits))

    @property
    def face_count(self) -> int:
        return self.faces.face_count

    @cached_property
    def genus(self) -> int:
        """
        The genus from Euler's relation.

        Raises:
            MapError: If the relation doesn't give a nonnegative integer.
        """

        twice = 2 - self.host.vertex_count + self.host.edge_count - \
            self.face_count
        if twice < 0 or twice % 2:
            raise MapError(
                attr='genus',
                msg=f'v - e + f = {2 - twice} does not give a valid genus'
            )
        return twice // 2

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus

    def corner_face(self, vertex: int, position: int) -> int:
        """
        The face a new dart would sit in if spliced into a vertex's rotation
        at the given index (before the dart currently at that index).

        Args:
            vertex: The vertex.
            position: An index from 0 to the rotation length, inclusive.

        Returns:
            int: The face id.

        Raises:
            MapError: If the position is out of range.
        """

        self.host.check_vertex(vertex)
        rot = self.rotations[vertex]
        if not 0 <= position <= len(rot):
            raise MapError(attr='position',
                           msg=f'position {position} is outside 0..'
                               f'{len(rot)} at vertex {vertex}')
        if not rot:
            return 0
        return self.faces.dart_faces[rot[position % len(rot)]]

    def corners_in_face(self, vertex: int, face: int) -> list[int]:
        """All splice positions at a vertex that lie inside a face."""

        rot = self.rotations[vertex]
        if not rot:
            return [0] if face == 0 else []
        return [i for i, d in enumerate(rot)
                if self.faces.dart_faces[d] == face]

    def common_corner(self, v: int, w: int) -> tuple[int, int]:
        """
        Find splice positions at v and w inside one common face, taking the
        lowest such face and the first corner of each vertex in it. An edge
        spliced there splits that face and leaves the genus unchanged.

        For v == w the second position is just after the first, so a new
        loop there bounds an empty disk.

        Args:
            v: The first vertex.
            w: The second vertex.

        Returns:
            tuple[int, int]: The positions, the second one counted after
            the first dart has been inserted when v == w.

        Raises:
            MapError: If v and w share no face.
        """

        self.host.check_vertex(v)
        self.host.check_vertex(w)
        if v == w:
            return 0, 1

        shared = self.faces.vertex_faces[v] & self.faces.vertex_faces[w]
        if not shared:
            raise MapError(attr='vertices',
                           msg=f'vertices {v} and {w} share no face')
        face = min(shared)
        return (self.corners_in_face(v, face)[0],
                self.corners_in_face(w, face)[0])

    def region_components(self,
                          removed_vertices: int,
                          removed_edges: Iterable[int]) -> int:
        """
        Count the components of the surface minus a set of vertices and
        (open) edges, by union-find over faces: faces on both sides of a
        kept edge are merged, and all faces around a kept vertex are merged.
        A removed edge may keep its endpoints.

        Args:
            removed_vertices: Packed subset of host vertices to remove.
            removed_edges: Host edge ids to remove.

        Returns:
            int: The number of components.
        """

        faces = self.faces
        removed = set(removed_edges)
        uf = UnionFind(faces.face_count)
        for e in self.host.edges:
            if e.id not in removed:
                uf.union(faces.dart_faces[2 * e.id],
                         faces.dart_faces[2 * e.id + 1])
        for v in range(self.host.vertex_count):
            if not removed_vertices >> v & 1:
                uf.union_all(faces.vertex_faces[v])
        return uf.num_components


def validate_and_trace(m: RotationMap) -> TraceResult:
    """
    Trace the faces of a map and compute its genus. The structural checks
    run when the map is built; this adds the Euler relation check.

    Args:
        m: The map.

    Returns:
        TraceResult: The face structure and the genus.

    Raises:
        MapError: If Euler's relation fails.
    """

    result = TraceResult(m.faces, m.genus)
    _log.debug(f'Traced {result.faces.face_count} face(s) on a map with '
               f'{m.host.vertex_count} vertices and {m.host.edge_count} '
               f'edges: genus {result.genus}')
    return result


def complement_components(m: RotationMap, island: Island) -> int:
    """
    Count the components of the surface minus one island of a marked
    subgraph, with everything else left in the surface.

    Args:
        m: The host map.
        island: A connected subgraph of the host, given by its vertex subset
        and edge ids.

    Returns:
        int: The number of components.

    Raises:
        IslandError: If the island isn't a connected subgraph of the host.
    """

    host = m.host
    if island.vertices >> host.vertex_count or island.vertices <= 0:
        raise IslandError(attr='island',
                          msg='vertices must be a nonempty subset of the host')

    local = bitset.members(island.vertices)
    index = {v: i for i, v in enumerate(local)}
    uf = UnionFind(len(local))
    for eid in island.edge_ids:
        if not host.has_edge(eid):
            raise IslandError(attr='island',
                              msg=f'edge {eid} is not in the host')
        e = host.edge(eid)
        if e.u not in index or e.v not in index:
            raise IslandError(attr='island',
                              msg=f'edge {eid} leaves the island')
        uf.union(index[e.u], index[e.v])
    if uf.num_components != 1:
        raise IslandError(attr='island', msg='the island is not connected')

    return m.region_components(island.vertices, island.edge_ids)


def _validate_structure(host: Multigraph,
                        rotations: tuple[tuple[int, ...], ...]) -> None:
    """
    Raises:
        MapError: If the darts aren't placed exactly once each at their
        own vertices, the edge ids aren't dense, or the host is disconnected.
    """

    if len(rotations) != host.vertex_count:
        raise MapError(attr='rotations',
                       msg=f'expected {host.vertex_count} rotations, got '
                           f'{len(rotations)}')

    if sorted(host.edge_ids) != list(range(host.edge_count)):
        raise MapError(attr='edges',
                       msg='host edge ids must be 0..e-1')

    dart_count = 2 * host.edge_count
    placed: dict[int, int] = {}
    for v, rot in enumerate(rotations):
        for d in rot:
            if not 0 <= d < dart_count:
                raise MapError(attr='dart',
                               msg=f'dart {d} at vertex {v} has no edge')
            if d in placed:
                raise MapError(
                    attr='dart',
                    msg=f'dart {dart_name(d)} is placed more than once '
                        f'(vertices {placed[d]} and {v})'
                )
            e = host.edge(dart_edge(d))
            expected = e.u if d % 2 == 0 else e.v
            if v != expected:
                raise MapError(
                    attr='dart',
                    msg=f'dart {dart_name(d)} belongs at vertex {expected}, '
                        f'not {v}'
                )
            placed[d] = v

    missing = [dart_name(d) for d in range(dart_count) if d not in placed]
    if missing:
        raise MapError(attr='dart',
                       msg=f'dart(s) {list_to_str(missing)} are not placed')

    if len(islands(host)) != 1:
        raise MapError(attr='host', msg='the host graph is not connected')
