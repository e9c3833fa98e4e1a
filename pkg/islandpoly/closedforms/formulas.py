from __future__ import annotations

from enum import Enum

from ..poly import IntPoly
from ..utils import RangeError


class ClosedKind(Enum):
    TREE = 'tree'
    PATH = 'path'
    STAR = 'star'
    CYCLE = 'cycle'
    DISCRETE = 'discrete'
    APPENDIX = 'appendix'
    DECORATED_TREE = 'decorated-tree'

    def __str__(self) -> str:
        return self.value


def _at_least(name: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise RangeError(attr=name,
                         msg=f'{name} must be at least {minimum}, '
                             f'got {value}')


def tree_poly(n: int) -> IntPoly:
    """(n-1)(1+x)^(n-2) + (1+x)^(n-1), for any planar tree on n vertices."""

    _at_least('n', n, 1)
    if n == 1:
        return IntPoly.constant(1)
    return (n - 1) * IntPoly.one_plus_x(n - 2) + IntPoly.one_plus_x(n - 1)


def cycle_poly(n: int, separating: bool = True) -> IntPoly:
    """
    n(1+x)^(n-2) + c x^(n-1), where c is 2 when the cycle separates the
    surface (always in the plane) and 1 otherwise.
    """

    _at_least('n', n, 3)
    c = 2 if separating else 1
    return n * IntPoly.one_plus_x(n - 2) + IntPoly.monomial(c, n - 1)


def discrete_poly(n: int) -> IntPoly:
    _at_least('n', n, 1)
    return n * IntPoly.one_plus_x(n - 1)


def appendix_poly(r: int) -> IntPoly:
    """
    A single vertex whose loops cut the surface into r pieces, with a
    pendant vertex attached: rx + (r+1).
    """

    _at_least('r', r, 1)
    return IntPoly.of(r + 1, r)


def decorated_tree_poly(n: int, loops: int, parallels: int) -> IntPoly:
    """
    A planar tree on n vertices with `loops` self-loops and `parallels`
    similar adjacencies:
    (1+loops+parallels)(1+x)^(n-1) + (n-1-parallels)(1+x)^(n-2).
    """

    _at_least('n', n, 2)
    _at_least('loops', loops, 0)
    _at_least('parallels', parallels, 0)
    return (1 + loops + parallels) * IntPoly.one_plus_x(n - 1) + \
        (n - 1 - parallels) * IntPoly.one_plus_x(n - 2)


def closed_beta(kind: ClosedKind | str,
                n: int,
                *,
                separating: bool = True,
                loops: int = 0,
                parallels: int = 0) -> IntPoly:
    """
    The island boundary polynomial of a standard family, by formula.

    Args:
        kind: The family.
        n: The vertex count; for appendix, the number of pieces r the
        base vertex cuts the surface into.
        separating: For cycles, whether the cycle separates the surface.
        loops: For decorated trees, the number of self-loops.
        parallels: For decorated trees, the number of similar adjacencies.

    Returns:
        IntPoly: The polynomial.

    Raises:
        RangeError: If an argument is outside the family's range.
    """

    match ClosedKind(kind):
        case ClosedKind.TREE | ClosedKind.PATH | ClosedKind.STAR:
            _at_least('n', n, 2)
            return tree_poly(n)
        case ClosedKind.CYCLE:
            return cycle_poly(n, separating)
        case ClosedKind.DISCRETE:
            return discrete_poly(n)
        case ClosedKind.APPENDIX:
            return appendix_poly(n)
        case ClosedKind.DECORATED_TREE:
            return decorated_tree_poly(n, loops, parallels)
