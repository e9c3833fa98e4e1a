from __future__ import annotations

import logging

from ..beta.engine import FaceCounter, check_size
from ..graphs.embedded import EmbeddedGraph
from ..poly import IntPoly
from ..utils import GraphError

_log = logging.getLogger(__name__)


def xi_poly(eg: EmbeddedGraph,
            v1: int,
            v2: int,
            edge_id: int,
            force: bool = False) -> IntPoly:
    """
    The gain from edge e = v1-v2: xi_j counts the j-subsets S with v1 and
    v2 in S where f(S) is one more with e than without it, and
    xi = sum xi_j x^(j-1). When no subset loses a face to e (always the
    case for a parallel edge), beta(eg) = beta(eg - e) + xi.

    Args:
        eg: The graph, containing e.
        v1: One endpoint of e.
        v2: The other endpoint (equal to v1 for a loop).
        edge_id: The edge.
        force: Whether to ignore the enumeration size limit.

    Returns:
        IntPoly: xi.

    Raises:
        GraphError: If e isn't a marked edge joining v1 and v2.
    """

    e = eg.check_marked_edge(edge_id)
    if {e.u, e.v} != {v1, v2}:
        raise GraphError(attr='edge',
                         msg=f'edge {edge_id} does not join {v1} and {v2}')
    check_size(eg.vertex_count, force)

    with_e = FaceCounter(eg)
    without_e = FaceCounter(eg.unmark_edges([edge_id]))
    index = {v: i for i, v in enumerate(eg.marked)}
    required = (1 << index[v1]) | (1 << index[v2])

    counts = [0] * eg.vertex_count
    for mask in range(1, 1 << eg.vertex_count):
        if mask & required != required:
            continue
        if with_e(mask) == without_e(mask) + 1:
            counts[mask.bit_count() - 1] += 1
    return IntPoly(tuple(counts))
