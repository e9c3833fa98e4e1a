from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from ..graphs.bitset import VertexSubset
from ..graphs.embedded import EmbeddedGraph
from ..utils import ColoringError, list_to_str


@dataclass(frozen=True)
class Coloring:
    """
    An assignment of colors to vertices, keyed by host vertex index. Colors
    are numbered densely from 0 and every color is used; `names` keeps a
    printable name for each. Adjacent vertices may share a color.
    """

    vertex_colors: tuple[tuple[int, int], ...]
    names: tuple[str, ...]

    def __post_init__(self):
        pairs = tuple(sorted((int(v), int(c)) for v, c in self.vertex_colors))
        object.__setattr__(self, 'vertex_colors', pairs)
        object.__setattr__(self, 'names', tuple(self.names))

        vertices = [v for v, _ in pairs]
        if len(set(vertices)) != len(vertices):
            raise ColoringError(attr='coloring',
                                msg='a vertex is colored more than once')
        used = {c for _, c in pairs}
        if used != set(range(len(self.names))):
            raise ColoringError(
                attr='coloring',
                msg=f'color ids must be 0..{len(self.names) - 1}, all used'
            )
        if len(set(self.names)) != len(self.names):
            raise ColoringError(attr='coloring',
                                msg='color names must be distinct')

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Hashable]) -> Coloring:
        """
        Build a coloring from vertex -> color label. Colors are numbered in
        the order they first appear going up through the vertices; names
        are the labels as strings.

        Args:
            mapping: The label of each colored vertex.

        Returns:
            Coloring: The dense coloring.
        """

        ids: dict[Hashable, int] = {}
        pairs = []
        for v in sorted(mapping):
            label = mapping[v]
            if label not in ids:
                ids[label] = len(ids)
            pairs.append((v, ids[label]))
        return cls(tuple(pairs), tuple(str(label) for label in ids))

    @classmethod
    def injective(cls, eg: EmbeddedGraph) -> Coloring:
        """Every marked vertex its own color."""
        return cls.from_mapping({v: v for v in eg.marked})

    @classmethod
    def constant(cls, eg: EmbeddedGraph, name: str = '0') -> Coloring:
        """Every marked vertex the same color."""
        return cls.from_mapping({v: name for v in eg.marked})

    @property
    def color_count(self) -> int:
        return len(self.names)

    @cached_property
    def _as_dict(self) -> dict[int, int]:
        return dict(self.vertex_colors)

    def as_dict(self) -> dict[int, int]:
        return dict(self._as_dict)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.vertex_colors)

    def color_of(self, v: int) -> int:
        try:
            return self._as_dict[v]
        except KeyError:
            raise ColoringError(attr='vertex',
                                msg=f'vertex {v} has no color')

    def color_id(self, color: int | str) -> int:
        """
        Resolve a color given by id or by name.

        Raises:
            ColoringError: If there's no such color.
        """

        if isinstance(color, int) and 0 <= color < self.color_count:
            return color
        if str(color) in self.names:
            return self.names.index(str(color))
        raise ColoringError(attr='color', msg=f"there is no color '{color}'")

    def classes(self) -> tuple[VertexSubset, ...]:
        """The packed vertex subset of each color."""

        masks = [0] * self.color_count
        for v, c in self.vertex_colors:
            masks[c] |= 1 << v
        return tuple(VertexSubset(m) for m in masks)

    def check_against(self, eg: EmbeddedGraph) -> None:
        """
        Raises:
            ColoringError: Unless exactly the marked vertices are colored.
        """

        colored = set(self.vertices)
        marked = set(eg.marked)
        if colored != marked:
            missing = sorted(marked - colored)
            extra = sorted(colored - marked)
            problems = []
            if missing:
                problems.append(f'vertices {list_to_str(missing)} have '
                                'no color')
            if extra:
                problems.append(f'vertices {list_to_str(extra)} are not '
                                'marked')
            raise ColoringError(attr='coloring', msg='; '.join(problems))

    def restrict(self, vertices: Iterable[int]) -> Coloring:
        """
        Keep only the given vertices and renumber the colors that remain.
        Names are kept.
        """

        keep = set(vertices)
        return Coloring.from_mapping({
            v: self.names[c] for v, c in self.vertex_colors if v in keep
        })

    def relabel(self, vertex_map: Mapping[int, int] | tuple[int, ...]) \
            -> Coloring:
        """Move the colors to new vertex indices, old index -> new index."""

        return Coloring.from_mapping({
            vertex_map[v]: self.names[c] for v, c in self.vertex_colors
        })

    def with_vertex(self, v: int, name: str) -> Coloring:
        """Color one more vertex, with an existing or a new color name."""

        mapping = {u: self.names[c] for u, c in self.vertex_colors}
        mapping[v] = name
        return Coloring.from_mapping(mapping)
