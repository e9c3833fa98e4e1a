from __future__ import annotations

from collections.abc import Mapping

from ..beta.coloring import Coloring
from ..utils import ColoringError


def merge_colors(col: Coloring, c: int | str, c2: int | str) -> Coloring:
    """
    Recolor every vertex of color c with color c2. The graph is untouched;
    color ids are renumbered densely afterwards.

    Args:
        col: The coloring.
        c: The color that disappears, by id or name.
        c2: The color it merges into, by id or name.

    Returns:
        Coloring: The merged coloring, with one color fewer.

    Raises:
        ColoringError: If either color is absent or they're the same.
    """

    old, new = col.color_id(c), col.color_id(c2)
    if old == new:
        raise ColoringError(attr='colors',
                            msg=f"can't merge color '{col.names[old]}' "
                                'into itself')
    return Coloring.from_mapping({
        v: col.names[new if x == old else x] for v, x in col.vertex_colors
    })


def permute_colors(col: Coloring,
                   permutation: Mapping[int, int]) -> Coloring:
    """
    Renumber the colors, old id -> new id. Names move with their colors.

    Raises:
        ColoringError: If the mapping isn't a permutation of the ids.
    """

    ids = set(range(col.color_count))
    if set(permutation) != ids or set(permutation.values()) != ids:
        raise ColoringError(attr='permutation',
                            msg=f'not a permutation of 0..'
                                f'{col.color_count - 1}')
    names = [''] * col.color_count
    for old, new in permutation.items():
        names[new] = col.names[old]
    return Coloring(
        tuple((v, permutation[x]) for v, x in col.vertex_colors),
        tuple(names)
    )
