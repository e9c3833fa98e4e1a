from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
import logging
import time

from humanfriendly import format_timespan

from .coloring import Coloring
from .counts import BetaPair, CountVector
from ..conf import settings
from ..graphs import bitset
from ..graphs.embedded import EmbeddedGraph
from ..poly import IntPoly
from ..utils import SizeLimitError
from ..utils.const import ENCODING_LIMIT

_log = logging.getLogger(__name__)


class FaceCounter:
    """
    Evaluates the island boundary count f(S) of an embedded graph for many
    subsets S. Subsets are local masks: bit i stands for the i-th marked
    vertex. The island split is a breadth-first search over adjacency masks.
    In surface mode each island is scored by the host map's region count,
    a union-find over its faces.
    """

    def __init__(self, eg: EmbeddedGraph):
        self.n: int = eg.vertex_count
        self.positions: tuple[int, ...] = eg.marked
        index = {v: i for i, v in enumerate(self.positions)}

        adjacency = [0] * self.n
        # (endpoint mask, edge id) per marked edge
        edges: list[tuple[int, int]] = []
        for e in eg.marked_edge_list:
            lu, lv = index[e.u], index[e.v]
            adjacency[lu] |= 1 << lv
            adjacency[lv] |= 1 << lu
            edges.append(((1 << lu) | (1 << lv), e.id))
        self.adjacency: tuple[int, ...] = tuple(adjacency)
        self.edges: tuple[tuple[int, int], ...] = tuple(edges)

        self.surface = eg.surface

    def islands(self, mask: int) -> list[int]:
        """Split a local mask into the masks of its islands."""

        out = []
        rest = mask
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                bit = frontier & -frontier
                frontier ^= bit
                new = self.adjacency[bit.bit_length() - 1] & mask & ~comp
                comp |= new
                frontier |= new
            out.append(comp)
            rest &= ~comp
        return out

    def _edges_inside(self, mask: int) -> int:
        return sum(1 for emask, _ in self.edges if emask & ~mask == 0)

    def _complement_regions(self, island: int) -> int:
        # The island takes its vertices and its own edges out of the surface
        removed_edges = [eid for emask, eid in self.edges
                         if emask & ~island == 0]
        return self.surface.region_components(
            bitset.scatter(island, self.positions), removed_edges
        )

    def __call__(self, mask: int) -> int:
        if not mask:
            return 0
        comps = self.islands(mask)
        if self.surface is None:
            return self._edges_inside(mask) - mask.bit_count() + \
                2 * len(comps)
        return sum(self._complement_regions(c) for c in comps)


def _count_range(eg: EmbeddedGraph, start: int, stop: int) -> CountVector:
    counter = FaceCounter(eg)
    counts = [0] * counter.n
    for mask in range(start, stop):
        counts[mask.bit_count() - 1] += counter(mask)
    return CountVector(tuple(counts))


def check_size(n: int, force: bool = False) -> None:
    """
    Make sure an enumeration over n vertices (or colors) is allowed.

    Args:
        n: The number of items whose subsets are enumerated.
        force: Whether to ignore the configured soft limit.

    Raises:
        SizeLimitError: If n is over the configured limit and force is not
        set, or over the hard encoding limit at all.
    """

    if n > ENCODING_LIMIT:
        raise SizeLimitError(
            attr='vertex_count',
            msg=f"{n} exceeds the maximum of {ENCODING_LIMIT} "
                "that subsets can be encoded for"
        )
    limit = settings.ENUMERATION_VERTEX_LIMIT
    if n > limit and not force:
        raise SizeLimitError(
            attr='vertex_count',
            msg=f'enumerating 2^{n} subsets is over the limit of '
                f'{limit} vertices; pass force to go ahead anyway'
        )


def island_counts(eg: EmbeddedGraph,
                  workers: int | None = None,
                  force: bool = False) -> CountVector:
    """
    Compute D_k, the sum of f(S) over all k-subsets S of marked vertices,
    for k = 1..n. Large graphs are split into ranges of subsets counted in
    separate processes; the result is the same either way.

    Args:
        eg: The embedded graph.
        workers: The number of worker processes. Defaults to the
        ENUMERATION_THREADS setting.
        force: Whether to ignore the enumeration size limit.

    Returns:
        CountVector: D_1..D_n. Empty if nothing is marked.

    Raises:
        SizeLimitError: If there are too many marked vertices.
    """

    n = eg.vertex_count
    check_size(n, force)
    if n == 0:
        return CountVector(())

    workers = settings.ENUMERATION_THREADS if workers is None else workers
    stop = 1 << n
    begin = time.perf_counter()

    if workers > 1 and n >= settings.PARALLEL_MIN_VERTICES:
        chunks = workers * settings.PARALLEL_CHUNKS_PER_WORKER
        bounds = [1 + (stop - 1) * i // chunks for i in range(chunks + 1)]
        _log.debug(f'Splitting {stop - 1} subsets into {chunks} ranges '
                   f'over {workers} processes')
        result = CountVector.zeros(n)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for part in executor.map(_count_range, repeat(eg),
                                     bounds[:-1], bounds[1:]):
                result = result + part
    else:
        result = _count_range(eg, 1, stop)

    _log.info(f'Counted island faces over {stop - 1} subsets of {n} '
              f'vertices ({eg.mode}) in '
              f'{format_timespan(time.perf_counter() - begin)}')
    return result


def beta(eg: EmbeddedGraph,
         workers: int | None = None,
         force: bool = False) -> BetaPair:
    """
    Compute the island boundary polynomial and its total, which adds the
    x^(n-1) term for the whole graph.

    Args:
        eg: The embedded graph.
        workers: The number of worker processes.
        force: Whether to ignore the enumeration size limit.

    Returns:
        BetaPair: beta_bar and beta_total.
    """

    counts = island_counts(eg, workers, force)
    return BetaPair(counts.beta_bar(), counts.beta_total())


def beta_total(eg: EmbeddedGraph, force: bool = False) -> IntPoly:
    return island_counts(eg, force=force).beta_total()


def face_table(eg: EmbeddedGraph, force: bool = False) -> list[int]:
    """
    f(S) for every subset S of the marked vertices, indexed by local mask.
    """

    check_size(eg.vertex_count, force)
    counter = FaceCounter(eg)
    return [counter(mask) for mask in range(1 << counter.n)]


def colored_counts(eg: EmbeddedGraph,
                   coloring: Coloring,
                   force: bool = False) -> CountVector:
    """
    Sum f over the unions of color classes, grouped by how many colors
    make up the union.

    Args:
        eg: The embedded graph.
        coloring: A coloring of exactly the marked vertices.
        force: Whether to ignore the enumeration size limit.

    Returns:
        CountVector: One count per number of colors, 1..c.

    Raises:
        ColoringError: If the coloring doesn't match the marked vertices.
        SizeLimitError: If there are too many colors.
    """

    coloring.check_against(eg)
    c = coloring.color_count
    check_size(c, force)

    index = {v: i for i, v in enumerate(eg.marked)}
    classes = [0] * c
    for v, color in coloring.vertex_colors:
        classes[color] |= 1 << index[v]

    counter = FaceCounter(eg)
    counts = [0] * c
    # Walk color subsets in Gray code order so each union is one xor away
    union = 0
    previous = 0
    for i in range(1, 1 << c):
        gray = i ^ (i >> 1)
        changed = gray ^ previous
        union ^= classes[changed.bit_length() - 1]
        previous = gray
        counts[gray.bit_count() - 1] += counter(union)

    _log.debug(f'Counted {(1 << c) - 1} unions of {c} color classes')
    return CountVector(tuple(counts), colored=True)


def beta_colored(eg: EmbeddedGraph,
                 coloring: Coloring,
                 force: bool = False) -> IntPoly:
    """The colored island polynomial, sum over color subsets T of
    f(union of T) x^(|T|-1)."""
    return colored_counts(eg, coloring, force).beta_total()
