"""
Vertex subsets packed into Python integers: bit i is set iff vertex i is a
member. Subsets of an n-vertex graph are the integers 0 .. 2^n - 1, and
enumerating them in increasing numeric order is the engine's canonical order.
"""

from collections.abc import Iterable, Iterator
from itertools import combinations
from typing import NewType

from ..utils import ENCODING_LIMIT, GraphError

VertexSubset = NewType('VertexSubset', int)

EMPTY = VertexSubset(0)


def from_members(members: Iterable[int]) -> VertexSubset:
    """
    Pack vertex indices into a subset.

    Args:
        members: The vertex indices. Duplicates are ignored.

    Returns:
        VertexSubset: The packed subset.

    Raises:
        GraphError: If an index is negative or beyond the encoding limit.
    """

    mask = 0
    for v in members:
        if not 0 <= v <= ENCODING_LIMIT:
            raise GraphError(attr='vertex',
                             msg=f'{v} is not a valid vertex index')
        mask |= 1 << v
    return VertexSubset(mask)


def members(s: int) -> list[int]:
    """
    Unpack a subset into its sorted vertex indices.

    Args:
        s: The packed subset.

    Returns:
        list[int]: The members in increasing order.
    """

    out = []
    while s:
        low = s & -s
        out.append(low.bit_length() - 1)
        s ^= low
    return out


def popcount(s: int) -> int:
    """The number of members."""
    return s.bit_count()


def full(n: int) -> VertexSubset:
    """The subset of all n vertices."""
    return VertexSubset((1 << n) - 1)


def contains(s: int, v: int) -> bool:
    return bool(s >> v & 1)


def iter_subsets_of_size(universe: int, size: int) -> Iterator[VertexSubset]:
    """
    Yield every subset of the given universe with exactly `size` members,
    in increasing numeric order.

    Args:
        universe: The packed superset.
        size: The number of members of each yielded subset.

    Yields:
        VertexSubset: The subsets.
    """

    for combo in combinations(members(universe), size):
        yield from_members(combo)


def iter_submasks(universe: int) -> Iterator[VertexSubset]:
    """
    Yield every subset of the given universe, the empty set included, in
    increasing numeric order.
    """

    found = []
    sub = universe
    while True:
        found.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & universe
    for sub in reversed(found):
        yield VertexSubset(sub)


def scatter(local: int, positions: tuple[int, ...]) -> VertexSubset:
    """
    Map a subset over positions 0..k-1 of a vertex list to the subset of the
    listed vertices: bit i of `local` selects vertex positions[i].

    Args:
        local: The packed subset of list positions.
        positions: The vertex indices, one per position.

    Returns:
        VertexSubset: The packed subset of vertex indices.
    """

    mask = 0
    i = 0
    while local:
        if local & 1:
            mask |= 1 << positions[i]
        local >>= 1
        i += 1
    return VertexSubset(mask)
