"""
Reconnecting four attachment points: a type I bridge joins {1, 2} to
{3, 4} through two new vertices m and n; a type II bridge joins {1, 3} to
{2, 4} through p and q. Both are planar constructions.
"""

from __future__ import annotations

from typing import NamedTuple

from ..beta.engine import FaceCounter, check_size
from ..graphs.embedded import EmbeddedGraph
from ..graphs.multigraph import Edge, Multigraph
from ..poly import IntPoly
from ..utils import GraphError


class PantsGraphs(NamedTuple):
    type_one: EmbeddedGraph
    type_two: EmbeddedGraph
    # The two new vertices of each bridge
    middle_one: tuple[int, int]
    middle_two: tuple[int, int]


def s_counts(g: Multigraph, i: int, j: int) -> tuple[int, ...]:
    """
    For k = 0..n, the number of k-subsets of vertices that contain i and j
    and keep them on the same island of the induced subgraph.

    Args:
        g: The graph.
        i: A vertex.
        j: Another vertex.

    Returns:
        tuple[int, ...]: s_0..s_n, indexed by k.

    Raises:
        GraphError: If i == j or either vertex doesn't exist.
    """

    g.check_vertex(i)
    g.check_vertex(j)
    if i == j:
        raise GraphError(attr='vertices', msg='i and j must be distinct')
    check_size(g.vertex_count)

    counter = FaceCounter(EmbeddedGraph.planar(g))
    pair = (1 << i) | (1 << j)
    s = [0] * (g.vertex_count + 1)
    for mask in range(1, 1 << g.vertex_count):
        if mask & pair != pair:
            continue
        # The island holding i
        island = next(c for c in counter.islands(mask) if c >> i & 1)
        if island >> j & 1:
            s[mask.bit_count()] += 1
    return tuple(s)


def _with_bridge(g: Multigraph,
                 left: tuple[int, int],
                 right: tuple[int, int]) -> Multigraph:
    a = g.vertex_count
    b = a + 1
    e = g.next_edge_id()
    new = (Edge(e, left[0], a), Edge(e + 1, left[1], a), Edge(e + 2, a, b),
           Edge(e + 3, b, right[0]), Edge(e + 4, b, right[1]))
    return Multigraph(a + 2, g.edges + new)


def _check_ends(g: Multigraph, ends: tuple[int, int, int, int]) -> None:
    for v in ends:
        g.check_vertex(v)
    if len(set(ends)) != 4:
        raise GraphError(attr='vertices',
                         msg='the four bridge ends must be distinct')


def pants_graphs(g: Multigraph,
                 v1: int, v2: int, v3: int, v4: int) -> PantsGraphs:
    """
    Build both bridges on a planar graph. The new vertices are the last
    two of each result.

    Raises:
        GraphError: If the ends aren't four distinct vertices.
    """

    _check_ends(g, (v1, v2, v3, v4))
    n = g.vertex_count
    return PantsGraphs(
        EmbeddedGraph.planar(_with_bridge(g, (v1, v2), (v3, v4))),
        EmbeddedGraph.planar(_with_bridge(g, (v1, v3), (v2, v4))),
        (n, n + 1),
        (n, n + 1)
    )


def pants_diff(g: Multigraph,
               v1: int, v2: int, v3: int, v4: int) -> IntPoly:
    """
    The difference beta(type I) - beta(type II) from s-counts alone:
    2x^2 sum_k (s12 + s34 - s13 - s24)_k x^(k-2).

    Args:
        g: The planar graph the bridges attach to.
        v1, v2, v3, v4: The four ends.

    Returns:
        IntPoly: The difference polynomial.

    Raises:
        GraphError: If the ends aren't four distinct vertices.
    """

    _check_ends(g, (v1, v2, v3, v4))
    s12, s34 = s_counts(g, v1, v2), s_counts(g, v3, v4)
    s13, s24 = s_counts(g, v1, v3), s_counts(g, v2, v4)
    return IntPoly(tuple(
        2 * (s12[k] + s34[k] - s13[k] - s24[k])
        for k in range(g.vertex_count + 1)
    ))
