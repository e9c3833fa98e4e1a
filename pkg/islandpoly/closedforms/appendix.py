"""
Island counts of subsets of points on a line and on a circle.

B(n, m) sums, over the m-subsets A of {1..n}, the number of maximal runs of
consecutive points in A. D(n, m) does the same with n and 1 adjacent, which
makes D(n, m) the m-th island boundary count of the cycle C_n. Brute force
is the reference; the closed forms and recurrences are checked against it.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from functools import cache
from itertools import combinations
from math import comb

from ..utils import RangeError


class BMode(Enum):
    BRUTE = 'brute'
    CLOSED = 'closed'
    # Three-term recurrence in n and m
    RECURRENCE = 'recurrence'
    # Conditioning on the run that ends at n
    LAST_RUN = 'last-run'
    # The last-run recurrence with the binomials summed
    TELESCOPED = 'telescoped'


class DMode(Enum):
    BRUTE = 'brute'
    VIA_B = 'via_B'
    CLOSED = 'closed'
    ALTERNATING = 'alternating'
    RECURRENCE = 'recurrence'


@dataclass(frozen=True)
class LineSubset:
    """
    A subset of {1..n}, packed so that bit i - 1 stands for point i.
    """

    mask: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise RangeError(attr='n', msg='n is negative')
        if self.mask < 0 or self.mask >> self.n:
            raise RangeError(attr='subset',
                             msg=f'the subset is not inside 1..{self.n}')

    @classmethod
    def of(cls, points: Iterable[int], n: int) -> LineSubset:
        mask = 0
        for p in points:
            if not 1 <= p <= n:
                raise RangeError(attr='subset',
                                 msg=f'point {p} is outside 1..{n}')
            mask |= 1 << (p - 1)
        return cls(mask, n)

    @property
    def size(self) -> int:
        return self.mask.bit_count()


def islands_on_line(a: LineSubset) -> int:
    """The number of maximal runs of consecutive points in a."""
    # A run starts at every point whose predecessor is absent
    return (a.mask & ~(a.mask << 1)).bit_count()


def islands_on_circle(a: LineSubset) -> int:
    """
    The number of maximal runs in a when n and 1 are neighbours. The full
    circle is one island.
    """

    full = (1 << a.n) - 1
    if a.n and a.mask == full:
        return 1
    rotated = ((a.mask << 1) | (a.mask >> (a.n - 1))) & full if a.n else 0
    return (a.mask & ~rotated).bit_count()


def _check_range(n: int, m: int, strict: bool = False) -> None:
    top = n - 1 if strict else n
    if not 1 <= m <= top:
        bound = 'm < n' if strict else 'm <= n'
        raise RangeError(attr='m',
                         msg=f'need 1 <= {bound}, got n={n}, m={m}')


def _subsets(n: int, m: int) -> Iterable[LineSubset]:
    for points in combinations(range(n), m):
        yield LineSubset(sum(1 << p for p in points), n)


@cache
def _b(n: int, m: int) -> int:
    # B extended by zero outside 1 <= m <= n
    if m < 1 or m > n:
        return 0
    return (n - m + 1) * comb(n - 1, m - 1)


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


@cache
def _b_recurrence(n: int, m: int) -> int:
    if m < 1 or m > n:
        return 0
    if m == 1:
        return n
    if m == n:
        return 1
    return _b_recurrence(n - 1, m) + _b_recurrence(n - 1, m - 1) + \
        comb(n - 2, m - 1)


@cache
def _b_last_run(n: int, m: int) -> int:
    if m < 1 or m > n:
        return 0
    total = _b_last_run(n - 1, m) + 1
    for r in range(1, m):
        total += _b_last_run(n - r - 1, m - r) + _binom(n - r - 1, m - r)
    return total


@cache
def _b_telescoped(n: int, m: int) -> int:
    if m < 1 or m > n:
        return 0
    return sum(_b_telescoped(n - 1 - r, m - r) for r in range(m)) + \
        comb(n - 1, m - 1)


def B_line(n: int, m: int, mode: BMode | str = BMode.CLOSED) -> int:
    """
    The total number of line islands over all m-subsets of {1..n}.

    Args:
        n: The number of points.
        m: The subset size, 1 <= m <= n.
        mode: How to compute it. Every mode gives the same value.

    Returns:
        int: B(n, m).

    Raises:
        RangeError: If m is out of range.
    """

    _check_range(n, m)
    match BMode(mode):
        case BMode.BRUTE:
            return sum(islands_on_line(a) for a in _subsets(n, m))
        case BMode.CLOSED:
            return _b(n, m)
        case BMode.RECURRENCE:
            return _b_recurrence(n, m)
        case BMode.LAST_RUN:
            return _b_last_run(n, m)
        case BMode.TELESCOPED:
            return _b_telescoped(n, m)


def B_line_telescoped(n: int, m: int) -> int:
    """
    The right side of B(n, m) = B(n-1, m) + B(n-2, m-1) + ... + B(n-m, 1)
    + C(n-1, m-1), from closed-form values.
    """

    _check_range(n, m)
    return sum(_b(n - 1 - r, m - r) for r in range(m)) + comb(n - 1, m - 1)


def D_circle(n: int, m: int, mode: DMode | str = DMode.CLOSED) -> int:
    """
    The total number of circle islands over all m-subsets of {1..n}, which
    is the m-th island boundary count of C_n.

    Args:
        n: The number of points.
        m: The subset size. Brute force takes 1 <= m <= n; the other modes
        need m < n.
        mode: How to compute it.

    Returns:
        int: D(n, m).

    Raises:
        RangeError: If m is out of range for the mode.
    """

    mode = DMode(mode)
    _check_range(n, m, strict=mode != DMode.BRUTE)
    match mode:
        case DMode.BRUTE:
            return sum(islands_on_circle(a) for a in _subsets(n, m))
        case DMode.VIA_B:
            return _b(n, m) - _binom(n - 2, m - 2)
        case DMode.CLOSED:
            return n * comb(n - 2, m - 1)
        case DMode.ALTERNATING:
            return sum((-1) ** j * (m - j) * comb(n, m - j)
                       for j in range(m))
        case DMode.RECURRENCE:
            # Split on the size r of the run through point n; r = m leaves
            # m rotations of a single run
            total = _b(n - 1, m) + m
            for r in range(1, m):
                total += r * (_b(n - r - 2, m - r) +
                              _binom(n - r - 2, m - r))
            return total
