from __future__ import annotations

from fractions import Fraction

from ..beta.engine import beta_total
from ..graphs.embedded import EmbeddedGraph


def total_island_count(eg: EmbeddedGraph, force: bool = False) -> int:
    """beta(-1), the signed total of island boundary counts."""
    return beta_total(eg, force)(-1)


def tee(beta_at_minus1: int,
        omega: Fraction | int = Fraction(1)) -> Fraction:
    """
    The topological entanglement entropy of the subsystems a graph stands
    for, -omega * beta(-1). Leave omega at 1 to get the coefficient of
    omega.
    """

    return -Fraction(omega) * beta_at_minus1
