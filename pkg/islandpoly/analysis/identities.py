"""
Identity checking. Each kind names an identity between island boundary
polynomials; check_identity() computes every term by its own enumeration
and returns LHS - RHS. A zero residual means the identity holds on that
instance, and anything else is a witness of where it fails.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
import logging

from .pants import pants_diff, pants_graphs, s_counts
from ..beta.coloring import Coloring
from ..beta.engine import beta_colored, beta_total
from ..graphs.embedded import EmbeddedGraph, Mode, face_count
from ..graphs.multigraph import Multigraph
from ..poly import IntPoly, poly_sum
from ..transforms import edits
from ..transforms.combine import CombineKind, combine
from ..transforms.edits import InsertionSpec
from ..transforms.recolor import merge_colors
from ..utils import HypothesisError

_log = logging.getLogger(__name__)

X = IntPoly.monomial(1, 1)


class IdentityKind(Enum):
    DISJOINT = 'disjoint'
    APPENDIX = 'appendix'
    BRIDGE = 'bridge'
    WEDGE = 'wedge'
    CONTRACT = 'contract'
    SPLIT = 'split'
    COLOR_MERGE = 'color-merge'
    COLORED_DISJOINT = 'colored-disjoint'
    COLORED_APPENDIX = 'colored-appendix'
    COLORED_BRIDGE = 'colored-bridge'
    PANTS = 'pants'
    PANTS_DIFF = 'pants-diff'
    SELF_LOOP = 'self-loop'
    PARALLEL_EDGE = 'parallel-edge'
    SHORT_CIRCUIT = 'short-circuit'
    SHORT_CIRCUIT_SPLIT = 'short-circuit-split'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class IdentityInstance:
    """
    The operands of one identity. Which fields a kind reads:

    - disjoint: two or more graphs.
    - appendix: one graph, the attach vertex (and its splice position as
      `insertion.first`, in surface mode).
    - bridge, wedge: two graphs and one attach vertex in each.
    - contract, split: one graph and an edge.
    - color-merge: one graph, its coloring and two colors.
    - colored-disjoint, colored-bridge: two graphs with colorings whose
      color names don't overlap; bridges take attach vertices.
    - colored-appendix: one graph, its coloring and the attach vertex.
    - pants, pants-diff: one planar graph and four distinct vertices.
    - self-loop: one graph, a vertex and optional splice positions.
    - parallel-edge: one graph, two adjacent vertices and optional splice
      positions.
    - short-circuit, short-circuit-split: one planar graph and two
      distinct vertices.
    """

    kind: IdentityKind
    graphs: tuple[EmbeddedGraph, ...]
    colorings: tuple[Coloring, ...] = ()
    vertices: tuple[int, ...] = ()
    edge: int | None = None
    colors: tuple[str, ...] = ()
    insertion: InsertionSpec | None = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', IdentityKind(self.kind))
        object.__setattr__(self, 'graphs', tuple(self.graphs))
        object.__setattr__(self, 'colorings', tuple(self.colorings))
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        object.__setattr__(self, 'colors', tuple(self.colors))


def _require(condition: bool, attr: str, msg: str) -> None:
    if not condition:
        raise HypothesisError(attr=attr, msg=msg)


def _operands(inst: IdentityInstance,
              graphs: int | None = None,
              colorings: int = 0,
              vertices: int | None = None,
              edge: bool = False) -> None:
    kind = inst.kind
    if graphs is not None:
        _require(len(inst.graphs) == graphs, 'graphs',
                 f'{kind} takes {graphs} graph(s), got {len(inst.graphs)}')
    _require(len(inst.colorings) == colorings, 'colorings',
             f'{kind} takes {colorings} coloring(s), got '
             f'{len(inst.colorings)}')
    if vertices is not None:
        _require(len(inst.vertices) == vertices, 'vertices',
                 f'{kind} takes {vertices} vertex designation(s), got '
                 f'{len(inst.vertices)}')
    if edge:
        _require(inst.edge is not None, 'edge', f'{kind} needs an edge')
    modes = {g.mode for g in inst.graphs}
    _require(len(modes) <= 1, 'graphs',
             'the graphs must all be planar or all on surfaces')


def _planar(inst: IdentityInstance) -> None:
    _require(all(g.mode == Mode.PLANAR for g in inst.graphs), 'mode',
             f'{inst.kind} is a planar identity')


class _Terms:
    """beta of each operand, with the size limit applied throughout."""

    def __init__(self, force: bool):
        self.force = force

    def beta(self, eg: EmbeddedGraph) -> IntPoly:
        return beta_total(eg, self.force)

    def colored(self, eg: EmbeddedGraph, col: Coloring) -> IntPoly:
        return beta_colored(eg, col, self.force)


def _disjoint(inst: IdentityInstance, t: _Terms) -> IntPoly:
    _operands(inst, vertices=0)
    _require(len(inst.graphs) >= 2, 'graphs',
             'a disjoint union takes at least two graphs')

    union = inst.graphs[0]
    for g in inst.graphs[1:]:
        union = combine(CombineKind.DISJOINT, union, g).graph
    n = union.vertex_count
    rhs = poly_sum(IntPoly.one_plus_x(n - g.vertex_count) * t.beta(g)
                   for g in inst.graphs)
    return t.beta(union) - rhs


def _appendix(inst: IdentityInstance, t: _Terms) -> IntPoly:
    _operands(inst, graphs=1, vertices=1)
    g = inst.graphs[0]
    position = inst.insertion.first if inst.insertion else 0
    lhs = t.beta(edits.add_appendix(g, inst.vertices[0], position))
    n = g.vertex_count
    return lhs - ((1 + X) * t.beta(g) + IntPoly.one_plus_x(n - 1))


def _bridge(inst: IdentityInstance, t: _Terms) -> IntPoly:
    _operands(inst, graphs=2, vertices=2)
    g1, g2 = inst.graphs
    v1, v2 = inst.vertices
    bridged = combine(CombineKind.BRIDGE, g1, g2, v1, v2,
                      ins=inst.insertion).graph
    union = combine(CombineKind.DISJOINT, g1, g2).graph
    n = g1.vertex_count + g2.vertex_count
    return t.beta(bridged) - (t.beta(union) -
                              X * IntPoly.one_plus_x(n - 2))


def _wedge(inst: IdentityInstance, t: _Terms) -> IntPoly:
    _operands(inst, graphs=2, vertices=2)
    g1, g2 = inst.graphs
    v1, v2 = inst.vertices
    wedged = combine(CombineKind.WEDGE, g1, g2, v1, v2,
                     ins=inst.insertion).graph
    n1, n2 = g1.vertex_count, g2.vertex_count
    rhs = IntPoly.one_plus_x(n1 - 1) * t.beta(g2) + \
        IntPoly.one_plus_x(n2 - 1) * t.beta(g1) - \
        IntPoly.one_plus_x(n1 + n2 - 2)
    return t.beta(wedged) - rhs


def _contract(inst: IdentityInstance, t: _Terms) -> IntPoly:
    _operands(inst, graphs=1, vertices=0, edge=True)
    g = inst.graphs[0]
    e = g.check_marked_edge(inst.edge)
    _require(not e.is_loop, 'edge', f'edge {e.id} is a self-loop')

    contracted = edits.contract(g, e.id)
    rhs = X * t.beta(contracted) + \
        t.beta(edits.delete_vertices(g, e.u)) + \
        t.beta(edits.delete_vertices(g, e.v)) - \
        (1 + X) * t.beta(edits.delete_vertices(g, e.u, e.v))
    return t.beta(g) - rhs


def _split(inst: IdentityInstance, t: _Terms) -> IntPoly:
    _operands(inst, graphs=1, vertices=0, edge=True)
    g = inst.graphs[0]
    e = g.check_marked_edge(inst.edge)
    n = g.vertex_count
    # The subdivision vertex on its own gains a face for every subset
    # avoiding both ends
    ends = len({e.u, e.v})
    _require(n >= ends, 'graph', 'the graph is too small')

    lhs = t.beta(edits.subdivide(g, e.id))
    rhs = X * t.beta(g) + t.beta(edits.delete_edge(g, e.id)) + \
        IntPoly.one_plus_x(n - ends)
    return lhs - rhs


def _without_colors(g: EmbeddedGraph,
                    col: Coloring,
                    *colors: int) -> tuple[EmbeddedGraph, Coloring]:
    drop = 0
    for c in colors:
        drop |= col.classes()[c]
    remaining = g.unmark_vertices(drop)
    return remaining, col.restrict(remaining.marked)


def _color_merge(inst: IdentityInstance, t: _Terms) -> IntPoly:
    _operands(inst, graphs=1, colorings=1, vertices=0)
    _require(len(inst.colors) == 2, 'colors',
             'color-merge takes two colors')
    g, col = inst.graphs[0], inst.colorings[0]
    c, c2 = (col.color_id(x) for x in inst.colors)
    _require(c != c2, 'colors', 'the two colors must differ')

    merged = merge_colors(col, c, c2)
    no_c = _without_colors(g, col, c)
    no_c2 = _without_colors(g, col, c2)
    neither = _without_colors(g, col, c, c2)
    rhs = X * t.colored(g, merged) + t.colored(*no_c) + \
        t.colored(*no_c2) - (1 + X) * t.colored(*neither)
    return t.colored(g, col) - rhs


def _separate_colors(col1: Coloring, col2: Coloring) -> None:
    shared = set(col1.names) & set(col2.names)
    _require(not shared, 'colorings',
             f'the colorings share colors {sorted(shared)}')


def _joined_coloring(col1: Coloring, col2: Coloring,
                     first_map: tuple[int, ...],
                     second_map: tuple[int, ...]) -> Coloring:
    mapping = {first_map[v]: col1.names[c] for v, c in col1.vertex_colors}
    mapping.update({second_map[v]: col2.names[c]
                    for v, c in col2.vertex_colors})
    return Coloring.from_mapping(mapping)


def _colored_disjoint(inst: IdentityInstance, t: _Terms) -> IntPoly:
    _operands(inst, graphs=2, colorings=2, vertices=0)
    (g1, g2), (col1, col2) = inst.graphs, inst.colorings
    _separate_colors(col1, col2)

    union = combine(CombineKind.DISJOINT, g1, g2)
    col = _joined_coloring(col1, col2, union.first_map, union.second_map)
    c1, c2 = col1.color_count, col2.color_count
    rhs = IntPoly.one_plus_x(c2) * t.colored(g1, col1) + \
        IntPoly.one_plus_x(c1) * t.colored(g2, col2)
    return t.colored(union.graph, col) - rhs


def _fresh_color(col: Coloring) -> str:
    i = col.color_count
    while f'c{i}' in col.names:
        i += 1
    return f'c{i}'


def _colored_appendix(inst: IdentityInstance, t: _Terms) -> IntPoly:
    _operands(inst, graphs=1, colorings=1, vertices=1)
    g, col = inst.graphs[0], inst.colorings[0]
    position = inst.insertion.first if inst.insertion else 0

    appended = edits.add_appendix(g, inst.vertices[0], position)
    pendant = g.graph.vertex_count
    col_app = col.with_vertex(pendant, _fresh_color(col))
    c = col.color_count
    rhs = (1 + X) * t.colored(g, col) + IntPoly.one_plus_x(c - 1)
    return t.colored(appended, col_app) - rhs


def _colored_bridge(inst: IdentityInstance, t: _Terms) -> IntPoly:
    _operands(inst, graphs=2, colorings=2, vertices=2)
    (g1, g2), (col1, col2) = inst.graphs, inst.colorings
    _separate_colors(col1, col2)
    v1, v2 = inst.vertices

    bridged = combine(CombineKind.BRIDGE, g1, g2, v1, v2, ins=inst.insertion)
    union = combine(CombineKind.DISJOINT, g1, g2)
    col_b = _joined_coloring(col1, col2, bridged.first_map,
                             bridged.second_map)
    col_u = _joined_coloring(col1, col2, union.first_map, union.second_map)
    c = col1.color_count + col2.color_count
    return t.colored(bridged.graph, col_b) - (
        t.colored(union.graph, col_u) - X * IntPoly.one_plus_x(c - 2)
    )


def _local_ends(inst: IdentityInstance, count: int) -> tuple:
    _operands(inst, graphs=1, vertices=count)
    _planar(inst)
    g = inst.graphs[0]
    for v in inst.vertices:
        g.check_marked(v)
    index = {v: i for i, v in enumerate(g.marked)}
    _require(len(set(inst.vertices)) == count, 'vertices',
             'the vertices must be distinct')
    return g.marked_graph(), tuple(index[v] for v in inst.vertices)


def _pants(inst: IdentityInstance, t: _Terms) -> IntPoly:
    base, ends = _local_ends(inst, 4)
    built = pants_graphs(base, *ends)
    one, two = built.type_one, built.type_two
    m, n = built.middle_one
    p, q = built.middle_two

    lhs = t.beta(one) - t.beta(two)
    rhs = (t.beta(edits.delete_vertices(one, m)) +
           t.beta(edits.delete_vertices(one, n))) - \
          (t.beta(edits.delete_vertices(two, p)) +
           t.beta(edits.delete_vertices(two, q)))
    return lhs - rhs


def _pants_diff(inst: IdentityInstance, t: _Terms) -> IntPoly:
    base, ends = _local_ends(inst, 4)
    built = pants_graphs(base, *ends)
    return t.beta(built.type_one) - t.beta(built.type_two) - \
        pants_diff(base, *ends)


def _edge_increment(inst: IdentityInstance,
                    t: _Terms,
                    old: EmbeddedGraph,
                    new: EmbeddedGraph,
                    ends: int) -> IntPoly:
    """
    beta(new) - beta(old) - the expected gain from one new edge between
    the vertices of `ends` (a host subset). Planar: every subset holding
    the ends gains a face. On a surface the edge either gains a face for
    all those subsets or for none; anything in between fails the
    hypotheses.
    """

    n = old.vertex_count
    k = ends.bit_count()
    gain = IntPoly.monomial(1, k - 1) * IntPoly.one_plus_x(n - k)
    if old.mode == Mode.SURFACE:
        _require(old.genus == new.genus, 'insertion',
                 f'the new edge changes the genus from {old.genus} to '
                 f'{new.genus}')
        if face_count(new, ends) == face_count(old, ends) + 1:
            # Every subset holding the ends gains, as in the plane
            pass
        elif face_count(new, new.marked_vertices) == \
                face_count(old, old.marked_vertices):
            gain = IntPoly()
        else:
            raise HypothesisError(
                attr='insertion',
                msg='the new edge splits a region for some subsets but '
                    'not for the smallest one'
            )
    return t.beta(new) - t.beta(old) - gain


def _self_loop(inst: IdentityInstance, t: _Terms) -> IntPoly:
    _operands(inst, graphs=1, vertices=1)
    g = inst.graphs[0]
    v = inst.vertices[0]
    new = edits.add_self_loop(g, v, inst.insertion)
    return _edge_increment(inst, t, g, new, 1 << v)


def _parallel_edge(inst: IdentityInstance, t: _Terms) -> IntPoly:
    _operands(inst, graphs=1, vertices=2)
    g = inst.graphs[0]
    v1, v2 = inst.vertices
    _require(v1 != v2, 'vertices', 'the endpoints must differ')
    _require(any(e.id in g.marked_edges
                 for e in g.graph.edges_between(v1, v2)),
             'vertices', f'vertices {v1} and {v2} are not adjacent')
    new = edits.add_parallel_edge(g, v1, v2, inst.insertion)
    return _edge_increment(inst, t, g, new, (1 << v1) | (1 << v2))


def _s_sum(base: Multigraph, i: int, j: int, shift: int) -> IntPoly:
    # sum_k s_k x^(k - shift)
    s = s_counts(base, i, j)
    return IntPoly(tuple(s[shift:]))


def _short_circuit(inst: IdentityInstance, t: _Terms) -> IntPoly:
    base, (i, j) = _local_ends(inst, 2)
    g = inst.graphs[0]
    n = g.vertex_count
    with_edge = edits.add_edge(g, *inst.vertices)
    rhs = t.beta(g) - X * IntPoly.one_plus_x(n - 2) + \
        2 * _s_sum(base, i, j, 1)
    return t.beta(with_edge) - rhs


def _short_circuit_split(inst: IdentityInstance, t: _Terms) -> IntPoly:
    base, (i, j) = _local_ends(inst, 2)
    g = inst.graphs[0]
    n = g.vertex_count
    new_id = g.graph.next_edge_id()
    split = edits.subdivide(edits.add_edge(g, *inst.vertices), new_id)
    rhs = (1 + X) * t.beta(g) + 2 * _s_sum(base, i, j, 0) + \
        (1 - X * X) * IntPoly.one_plus_x(n - 2)
    return t.beta(split) - rhs


_CHECKS: dict[IdentityKind, Callable[[IdentityInstance, _Terms], IntPoly]] = {
    IdentityKind.DISJOINT: _disjoint,
    IdentityKind.APPENDIX: _appendix,
    IdentityKind.BRIDGE: _bridge,
    IdentityKind.WEDGE: _wedge,
    IdentityKind.CONTRACT: _contract,
    IdentityKind.SPLIT: _split,
    IdentityKind.COLOR_MERGE: _color_merge,
    IdentityKind.COLORED_DISJOINT: _colored_disjoint,
    IdentityKind.COLORED_APPENDIX: _colored_appendix,
    IdentityKind.COLORED_BRIDGE: _colored_bridge,
    IdentityKind.PANTS: _pants,
    IdentityKind.PANTS_DIFF: _pants_diff,
    IdentityKind.SELF_LOOP: _self_loop,
    IdentityKind.PARALLEL_EDGE: _parallel_edge,
    IdentityKind.SHORT_CIRCUIT: _short_circuit,
    IdentityKind.SHORT_CIRCUIT_SPLIT: _short_circuit_split,
}


def check_identity(inst: IdentityInstance, force: bool = False) -> IntPoly:
    """
    Evaluate an identity on one instance.

    Args:
        inst: The identity kind and its operands.
        force: Whether to ignore the enumeration size limit.

    Returns:
        IntPoly: LHS - RHS, zero exactly when the identity holds.

    Raises:
        HypothesisError: If the operands don't satisfy the identity's
        hypotheses.
        ValidationError: If an operand refers to vertices, edges or colors
        that don't exist.
    """

    residual = _CHECKS[inst.kind](inst, _Terms(force))

    if residual.is_zero():
        _log.debug(f'Identity {inst.kind} holds')
    else:
        _log.info(f'Identity {inst.kind} fails with residual {residual}')
    return residual
