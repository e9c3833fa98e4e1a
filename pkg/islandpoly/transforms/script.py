"""
Operation scripts: replayable sequences of edits, one per line.

    loop v [pos pos]      self-loop at v
    par v w [pos pos]     edge between distinct vertices v and w
    subdiv e              subdivide edge e
    contract e            contract edge e
    bridge v w            join two islands by a new edge
    wedge v w             identify v and w, which lie on different islands
    I v k                 self-loop at v subdivided k times
    II v w k              similar adjacency on the edge v-w subdivided k times

Vertices and edges are host indices at the time the step runs. Blank lines
and '#' comments are ignored.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
import logging
from typing import NamedTuple

from . import edits
from .edits import InsertionSpec
from ..graphs.embedded import EmbeddedGraph, Mode
from ..utils import ScriptError, ValidationError

_log = logging.getLogger(__name__)

# Operation name -> allowed argument counts
OPERATIONS: dict[str, tuple[int, ...]] = {
    'loop': (1, 3),
    'par': (2, 4),
    'subdiv': (1,),
    'contract': (1,),
    'bridge': (2,),
    'wedge': (2,),
    'I': (2,),
    'II': (3,),
}

ADMISSIBLE = frozenset({'I', 'II'})


class ScriptOp(NamedTuple):
    name: str
    args: tuple[int, ...]
    line: int = 0


@dataclass(frozen=True)
class AdmissibleOp:
    """
    An operation that keeps a graph in the tree-cycle family. Type I adds a
    self-loop at v and subdivides it k times, which wedges a cycle C_{k+1}
    on at v. Type II adds a similar adjacency to the edge v-w and subdivides
    it k times, which runs a path P_{k+2} alongside that edge.
    """

    kind: str
    v: int
    w: int | None = None
    k: int = 0

    def __post_init__(self):
        if self.kind not in ADMISSIBLE:
            raise ScriptError(attr='operation',
                              msg=f"admissible operations are I and II, "
                                  f"not '{self.kind}'")
        if (self.kind == 'II') != (self.w is not None):
            raise ScriptError(attr='operation',
                              msg=f'operation {self.kind} has the wrong '
                                  'number of vertices')
        if self.k < 0:
            raise ScriptError(attr='k',
                              msg='the subdivision count is negative')

    def to_script_op(self) -> ScriptOp:
        if self.kind == 'I':
            return ScriptOp('I', (self.v, self.k))
        return ScriptOp('II', (self.v, self.w, self.k))


def parse_script(text: str) -> list[ScriptOp]:
    """
    Parse an operation script.

    Args:
        text: The script.

    Returns:
        list[ScriptOp]: The operations in order.

    Raises:
        ScriptError: On an unknown operation, a bad argument count, or an
        argument that isn't a nonnegative integer.
    """

    ops = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        name, *words = line.split()
        if name not in OPERATIONS:
            raise ScriptError(attr='operation',
                              msg=f"unknown operation '{name}'",
                              line=number)
        if len(words) not in OPERATIONS[name]:
            raise ScriptError(
                attr='arguments',
                msg=f"'{name}' takes " + ' or '.join(
                    str(c) for c in OPERATIONS[name]
                ) + f' arguments, not {len(words)}',
                line=number
            )
        try:
            args = tuple(int(w) for w in words)
        except ValueError:
            raise ScriptError(attr='arguments',
                              msg=f"arguments of '{name}' must be integers",
                              line=number)
        if any(a < 0 for a in args):
            raise ScriptError(attr='arguments',
                              msg='arguments must be nonnegative',
                              line=number)
        ops.append(ScriptOp(name, args, number))
    return ops


def _join(eg: EmbeddedGraph, v: int, w: int) -> tuple[EmbeddedGraph, int]:
    eg.check_marked(v)
    eg.check_marked(w)
    for island in eg.islands_of(eg.marked_vertices):
        if island.vertices >> v & 1 and island.vertices >> w & 1:
            raise ScriptError(attr='vertices',
                              msg=f'vertices {v} and {w} are on the same '
                                  'island')
    new_id = eg.graph.next_edge_id()
    return edits.add_edge(eg, v, w), new_id


def _loop_cycle(eg: EmbeddedGraph, v: int, k: int) -> EmbeddedGraph:
    loop_id = eg.graph.next_edge_id()
    result = edits.add_self_loop(eg, v)
    last = loop_id
    for _ in range(k):
        next_id = result.graph.next_edge_id()
        result = edits.subdivide(result, last)
        last = next_id
    return result


def _similar_path(eg: EmbeddedGraph, v: int, w: int, k: int) \
        -> EmbeddedGraph:
    eg.check_marked(v)
    eg.check_marked(w)
    if v == w:
        raise ScriptError(attr='vertices',
                          msg='a similar adjacency needs two distinct '
                              'vertices')
    edges = [e for e in eg.graph.edges_between(v, w)
             if e.id in eg.marked_edges]
    if not edges:
        raise ScriptError(attr='vertices',
                          msg=f'vertices {v} and {w} are not adjacent')
    return edits.short_circuit(eg, edges[0].id, k)


def apply_op(eg: EmbeddedGraph, op: ScriptOp) -> EmbeddedGraph:
    """
    Run one operation.

    Raises:
        ScriptError: If the operation refers to vertices or edges that
        don't exist or fails its preconditions. The script line is
        attached.
    """

    a = op.args
    try:
        match op.name:
            case 'loop':
                ins = InsertionSpec(a[1], a[2]) if len(a) == 3 else None
                return edits.add_self_loop(eg, a[0], ins)
            case 'par':
                ins = InsertionSpec(a[2], a[3]) if len(a) == 4 else None
                return edits.add_parallel_edge(eg, a[0], a[1], ins)
            case 'subdiv':
                return edits.subdivide(eg, a[0])
            case 'contract':
                return edits.contract(eg, a[0])
            case 'bridge':
                return _join(eg, a[0], a[1])[0]
            case 'wedge':
                joined, new_id = _join(eg, a[0], a[1])
                return edits.contract(joined, new_id)
            case 'I':
                return _loop_cycle(eg, a[0], a[1])
            case 'II':
                return _similar_path(eg, a[0], a[1], a[2])
    except ScriptError as e:
        if e.line is None:
            e.line = op.line or None
        raise
    except ValidationError as e:
        raise ScriptError(attr=e.attr, msg=e.msg,
                          line=op.line or None) from e
    raise ScriptError(attr='operation', msg=f"unknown operation '{op.name}'",
                      line=op.line or None)


def run_script(eg: EmbeddedGraph, ops: Iterable[ScriptOp]) -> EmbeddedGraph:
    """Replay operations in order, returning the final graph."""

    count = 0
    for op in ops:
        eg = apply_op(eg, op)
        count += 1
    _log.debug(f'Ran {count} script operation(s); the graph has '
               f'{eg.vertex_count} vertices and {len(eg.marked_edges)} '
               'edges')
    return eg


def tree_cycle_generator(tree: EmbeddedGraph,
                         ops: Iterable[AdmissibleOp | ScriptOp]) \
        -> EmbeddedGraph:
    """
    Build a tree-cycle graph from a seed tree by admissible operations.

    Args:
        tree: A planar tree on at least 3 vertices.
        ops: Operations of type I and II.

    Returns:
        EmbeddedGraph: The tree-cycle graph.

    Raises:
        ScriptError: If the seed isn't a planar tree on 3 or more vertices,
        an operation isn't admissible, or it refers to missing vertices or
        edges.
    """

    if tree.mode != Mode.PLANAR:
        raise ScriptError(attr='tree', msg='tree-cycle graphs are planar')
    if tree.vertex_count < 3 or not tree.marked_graph().is_tree():
        raise ScriptError(attr='tree',
                          msg='the seed must be a tree on at least 3 '
                              'vertices')

    script = []
    for op in ops:
        if isinstance(op, AdmissibleOp):
            op = op.to_script_op()
        if op.name not in ADMISSIBLE:
            raise ScriptError(attr='operation',
                              msg=f"'{op.name}' is not an admissible "
                                  'operation',
                              line=op.line or None)
        script.append(op)
    return run_script(tree, script)
