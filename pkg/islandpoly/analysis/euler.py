from __future__ import annotations

from dataclasses import dataclass
import logging

from ..beta.engine import face_table
from ..graphs.embedded import EmbeddedGraph
from ..poly import IntPoly
from ..utils import HypothesisError

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EulerEmergence:
    """
    Both sides of (-1)^n beta(-1) + sum over induced subgraphs S on 3..n-1
    vertices of (-1)^|S| beta_S(-1) = chi - 2f, plus the residual of
    beta = f x^(n-1) + sum_k (-1)^(n-1-k) sum_{|S|=k} beta_S.
    """

    lhs: int
    rhs: int
    euler_characteristic: int
    faces: int
    recursion_residual: IntPoly

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs and self.recursion_residual.is_zero()


def euler_emergence(eg: EmbeddedGraph,
                    allow_multigraph: bool = False,
                    force: bool = False) -> EulerEmergence:
    """
    Recover chi - 2f from signed total island counts of induced subgraphs.
    Every beta_S is rebuilt from one table of face counts, so the work is
    3^n.

    Args:
        eg: A graph on at least 3 vertices.
        allow_multigraph: Run on graphs with loops or parallel edges, where
        the two sides need not agree.
        force: Whether to ignore the enumeration size limit.

    Returns:
        EulerEmergence: Both sides and the recursion residual.

    Raises:
        HypothesisError: If n < 3, or the graph isn't simple and
        allow_multigraph isn't set.
    """

    n = eg.vertex_count
    if n < 3:
        raise HypothesisError(attr='vertex_count',
                              msg=f'need at least 3 vertices, got {n}')
    if not allow_multigraph and not eg.marked_graph().is_simple():
        raise HypothesisError(attr='graph',
                              msg='the graph has loops or parallel edges')

    f = face_table(eg, force)
    full = (1 << n) - 1

    # Per subset size k, the sum of beta_S over |S| = k
    size_sums = [[0] * n for _ in range(n + 1)]
    lhs = 0
    for s in range(1, full + 1):
        size = s.bit_count()
        coefficients = size_sums[size]
        at_minus_one = 0
        t = s
        while t:
            k = t.bit_count()
            coefficients[k - 1] += f[t]
            at_minus_one += f[t] if k % 2 else -f[t]
            t = (t - 1) & s
        if size >= 3:
            lhs += at_minus_one if size % 2 == 0 else -at_minus_one

    chi = eg.euler_characteristic
    faces = f[full]
    rhs = chi - 2 * faces

    expansion = IntPoly.monomial(faces, n - 1)
    for k in range(1, n):
        term = IntPoly(tuple(size_sums[k]))
        expansion = expansion + (term if (n - 1 - k) % 2 == 0 else -term)
    beta = IntPoly(tuple(size_sums[n]))
    residual = beta - expansion

    _log.info(f'Signed island counts give {lhs}; chi - 2f = {rhs}')
    return EulerEmergence(lhs, rhs, chi, faces, residual)
