"""
Standard graphs and host maps: paths, cycles, complete graphs, random trees
and planar graphs (with genus-0 rotation systems from networkx), and torus
scaffold hosts for graphs whose embedding is not cellular on its own.
"""

import logging
import random

import networkx as nx

from .embedded import EmbeddedGraph
from .multigraph import Multigraph
from .rotation_map import RotationMap, dart_of
from ..utils import GraphError, SIDE_A, SIDE_B

_log = logging.getLogger(__name__)


def discrete_graph(n: int) -> Multigraph:
    return Multigraph(n)


def path_graph(n: int) -> Multigraph:
    return Multigraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Multigraph:
    """The cycle 0-1-...-(n-1)-0. Edge i joins i and i+1 (mod n)."""

    if n < 1:
        raise GraphError(attr='n', msg='a cycle needs at least one vertex')
    return Multigraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Multigraph:
    return Multigraph.from_edges(
        n, ((i, j) for i in range(n) for j in range(i + 1, n))
    )


def star_graph(n: int) -> Multigraph:
    """A center 0 joined to n - 1 leaves."""
    return Multigraph.from_edges(n, ((0, i) for i in range(1, n)))


def from_networkx(graph: nx.Graph) -> Multigraph:
    """
    Convert a networkx graph. Nodes are numbered in sorted order and edges
    get ids in the order networkx lists them.
    """

    index = {node: i for i, node in enumerate(sorted(graph.nodes))}
    return Multigraph.from_edges(
        len(index), ((index[u], index[v]) for u, v in graph.edges())
    )


def to_networkx(g: Multigraph) -> nx.MultiGraph:
    """Convert to a networkx multigraph keyed by edge id."""

    graph = nx.MultiGraph()
    graph.add_nodes_from(range(g.vertex_count))
    for e in g.edges:
        graph.add_edge(e.u, e.v, key=e.id)
    return graph


def random_tree(n: int, rng: random.Random) -> Multigraph:
    """A uniformly random labelled tree on n >= 1 vertices."""

    if n < 1:
        raise GraphError(attr='n', msg='a tree needs at least one vertex')
    if n <= 2:
        return path_graph(n)
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    return from_networkx(nx.from_prufer_sequence(prufer))


def random_connected_planar(n: int,
                            rng: random.Random,
                            extra_edges: int | None = None) -> Multigraph:
    """
    A random connected simple planar graph: a random tree plus as many
    random extra edges as stay planar.

    Args:
        n: The number of vertices.
        rng: The random source.
        extra_edges: How many extra edges to try. Defaults to a random
        number up to 2n.

    Returns:
        Multigraph: The graph, with edge ids 0..e-1.
    """

    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((e.u, e.v) for e in random_tree(n, rng).edges)

    if extra_edges is None:
        extra_edges = rng.randint(0, 2 * n)
    for _ in range(extra_edges):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or graph.has_edge(u, v):
            continue
        graph.add_edge(u, v)
        if not nx.check_planarity(graph)[0]:
            graph.remove_edge(u, v)

    return from_networkx(graph)


def planar_rotation_map(g: Multigraph) -> RotationMap:
    """
    Build a genus-0 rotation system for a connected simple planar graph
    from a networkx planar embedding.

    Args:
        g: The graph, with edge ids 0..e-1.

    Returns:
        RotationMap: A map on the sphere.

    Raises:
        GraphError: If the graph isn't simple or isn't planar.
    """

    if not g.is_simple():
        raise GraphError(attr='graph', msg='the graph must be simple')
    if g.edge_count == 0:
        return RotationMap(g, tuple(() for _ in range(g.vertex_count)))

    graph = nx.Graph()
    graph.add_nodes_from(range(g.vertex_count))
    for e in g.edges:
        graph.add_edge(e.u, e.v, id=e.id)
    is_planar, embedding = nx.check_planarity(graph)
    if not is_planar:
        raise GraphError(attr='graph', msg='the graph is not planar')

    rotations = []
    for v in range(g.vertex_count):
        darts = []
        for w in embedding.neighbors_cw_order(v):
            e = g.edge(graph[v][w]['id'])
            darts.append(dart_of(e.id, SIDE_A if e.u == v else SIDE_B))
        # networkx lists neighbours clockwise
        rotations.append(tuple(reversed(darts)))
    return RotationMap(g, tuple(rotations))


def one_vertex_torus() -> RotationMap:
    """The standard torus map: one vertex, loops a and b, one face."""

    return RotationMap(
        Multigraph.from_edges(1, [(0, 0), (0, 0)]),
        ((dart_of(0, SIDE_A), dart_of(1, SIDE_A),
          dart_of(0, SIDE_B), dart_of(1, SIDE_B)),)
    )


def torus_cycle(n: int, separating: bool = False) -> EmbeddedGraph:
    """
    A cycle C_n marked on a torus. The host is the cycle plus unmarked
    scaffold loops at vertex 0.

    Non-separating: the cycle is one generator of the torus and a single
    scaffold loop is the other. Separating: the cycle bounds a disk and two
    scaffold loops carry the handle.

    Args:
        n: The cycle length, at least 1.
        separating: Whether the cycle bounds a disk. Defaults to False.

    Returns:
        EmbeddedGraph: The cycle, marked in its torus host.
    """

    cycle = cycle_graph(n)
    # Edge n-1 joins n-1 to 0, so its side b is the dart arriving at 0
    out_dart, in_dart = dart_of(0, SIDE_A), dart_of(n - 1, SIDE_B)
    rotations = [[] for _ in range(n)]
    for i in range(1, n):
        rotations[i] = [dart_of(i - 1, SIDE_B), dart_of(i, SIDE_A)]

    if separating:
        a, b = n, n + 1
        pairs = [(e.u, e.v) for e in cycle.edges] + [(0, 0), (0, 0)]
        rotations[0] = [out_dart, in_dart,
                        dart_of(a, SIDE_A), dart_of(b, SIDE_A),
                        dart_of(a, SIDE_B), dart_of(b, SIDE_B)]
    else:
        b = n
        pairs = [(e.u, e.v) for e in cycle.edges] + [(0, 0)]
        rotations[0] = [out_dart, dart_of(b, SIDE_A),
                        in_dart, dart_of(b, SIDE_B)]

    host = Multigraph.from_edges(n, pairs)
    m = RotationMap(host, tuple(tuple(r) for r in rotations))
    return EmbeddedGraph.on_surface(m, range(n), range(n))


def torus_scaffold(m: RotationMap, vertex: int = 0) -> EmbeddedGraph:
    """
    Put a planar map into a torus: wedge the one-vertex torus onto a vertex
    of the map, in the corner before its first dart, and mark the original
    map. Unmarked scaffold loops carry the handle.

    Args:
        m: A map, usually of genus 0.
        vertex: Where the handle is attached. Defaults to 0.

    Returns:
        EmbeddedGraph: The original graph, marked in a host of genus one
        more than m.
    """

    g = m.host
    g.check_vertex(vertex)
    a, b = g.edge_count, g.edge_count + 1
    host = Multigraph.from_edges(
        g.vertex_count,
        [(e.u, e.v) for e in sorted(g.edges)] + [(vertex, vertex)] * 2
    )
    rotations = [list(r) for r in m.rotations]
    rotations[vertex] = [dart_of(a, SIDE_A), dart_of(b, SIDE_A),
                         dart_of(a, SIDE_B), dart_of(b, SIDE_B)] + \
        rotations[vertex]
    torus = RotationMap(host, tuple(tuple(r) for r in rotations))
    return EmbeddedGraph.on_surface(torus, range(g.vertex_count),
                                    range(g.edge_count))


def random_torus_graph(n: int,
                       rng: random.Random,
                       mark_probability: float = 0.8) -> EmbeddedGraph:
    """
    A random cellular torus host on n vertices with a random marked
    subgraph. Starting from the one-vertex torus, it repeatedly adds pendant
    vertices, subdivides edges, or adds edges inside a face, none of which
    changes the genus.

    Args:
        n: The number of host vertices.
        rng: The random source.
        mark_probability: The chance that each vertex, and then each edge
        between marked vertices, is marked. Defaults to 0.8.

    Returns:
        EmbeddedGraph: The marked graph. At least one vertex is marked.
    """

    # Imported here: the edit operations build on this package
    from ..transforms.edits import InsertionSpec, add_appendix, add_edge, \
        subdivide

    eg = EmbeddedGraph.on_surface(one_vertex_torus())
    while eg.graph.vertex_count < n or rng.random() < 0.3:
        m = eg.surface
        choice = rng.random()
        if eg.graph.vertex_count < n and choice < 0.4:
            v = rng.randrange(eg.graph.vertex_count)
            eg = add_appendix(eg, v, rng.randint(0, len(m.rotations[v])))
        elif eg.graph.vertex_count < n and choice < 0.7:
            eg = subdivide(eg, rng.randrange(eg.graph.edge_count))
        else:
            face = rng.randrange(m.face_count)
            ends = [v for v in range(eg.graph.vertex_count)
                    if face in m.faces.vertex_faces[v]]
            u, v = rng.choice(ends), rng.choice(ends)
            p = rng.choice(m.corners_in_face(u, face))
            if u == v:
                ins = InsertionSpec(p, p + 1)
            else:
                ins = InsertionSpec(p, rng.choice(m.corners_in_face(v, face)))
            eg = add_edge(eg, u, v, ins)
        if eg.graph.vertex_count >= n and \
                eg.graph.edge_count > 3 * n + 4:
            break

    marked = [v for v in range(eg.graph.vertex_count)
              if rng.random() < mark_probability] or [0]
    edges = [e.id for e in eg.graph.edges
             if e.u in marked and e.v in marked
             and rng.random() < mark_probability]
    return EmbeddedGraph.on_surface(eg.surface, marked, edges)
