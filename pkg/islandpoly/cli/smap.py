"""
The .smap text format for embedded graphs. One directive per line, '#'
starts a comment:

    mode planar|surface         defaults to planar
    vertices N                  required, once
    edge <id> <u> <v>
    rot <v> <dart>...           darts like 3a / 3b, counterclockwise;
                                surface mode only, one line per vertex
    mark vertices <v>...        the graph under study; everything is
    mark edges <id>...          marked unless these appear
    color <v> <name>

Every problem is reported as a ParseError with its line and column.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import logging
import re

from ..beta.coloring import Coloring
from ..graphs import bitset
from ..graphs.embedded import EmbeddedGraph, Mode
from ..graphs.multigraph import Edge, Multigraph
from ..graphs.rotation_map import RotationMap, dart_name, dart_of
from ..utils import (ColoringError, GraphError, MapError, ParseError,
                     SIDE_NAMES, ValidationError)

_log = logging.getLogger(__name__)

_DART = re.compile(r'(\d+)([ab])')
_TOKEN = re.compile(r'\S+')


class _Token:
    __slots__ = ('text', 'line', 'column')

    def __init__(self, text: str, line: int, column: int):
        self.text = text
        self.line = line
        self.column = column

    def error(self, msg: str) -> ParseError:
        return ParseError(attr=self.text, msg=msg, line=self.line,
                          column=self.column)

    def integer(self, what: str) -> int:
        try:
            value = int(self.text)
        except ValueError:
            raise self.error(f"expected {what}, got '{self.text}'")
        if value < 0:
            raise self.error(f'{what} must be nonnegative')
        return value


@dataclass
class MapDocument:
    """
    A parsed .smap document before it's turned into objects. `where`
    remembers the first line of each directive kind for error reports.
    """

    mode: Mode = Mode.PLANAR
    vertex_count: int | None = None
    edges: list[Edge] = field(default_factory=list)
    rotations: dict[int, tuple[int, ...]] = field(default_factory=dict)
    marked_vertices: list[int] | None = None
    marked_edges: list[int] | None = None
    colors: dict[int, str] = field(default_factory=dict)
    where: dict[str, int] = field(default_factory=dict)

    def _line(self, directive: str) -> int:
        return self.where.get(directive, 1)

    def to_graph(self) -> EmbeddedGraph:
        """
        Build the embedded graph.

        Raises:
            ParseError: If the document describes an invalid map or marks.
        """

        graph = Multigraph(self.vertex_count, tuple(self.edges))
        surface = None
        if self.mode == Mode.SURFACE:
            try:
                surface = RotationMap(graph, tuple(
                    self.rotations.get(v, ()) for v in
                    range(self.vertex_count)
                ))
            except MapError as e:
                raise ParseError(attr=e.attr, msg=e.msg,
                                 line=self._line('rot')) from e

        try:
            return EmbeddedGraph(
                graph, surface,
                None if self.marked_vertices is None
                else bitset.from_members(self.marked_vertices),
                None if self.marked_edges is None
                else frozenset(self.marked_edges)
            )
        except GraphError as e:
            raise ParseError(attr=e.attr, msg=e.msg,
                             line=self._line('mark')) from e

    def coloring(self, eg: EmbeddedGraph) -> Coloring | None:
        """
        The coloring, if the document has one.

        Raises:
            ParseError: If it doesn't color exactly the marked vertices.
        """

        if not self.colors:
            return None
        col = Coloring.from_mapping(self.colors)
        try:
            col.check_against(eg)
        except ColoringError as e:
            raise ParseError(attr=e.attr, msg=e.msg,
                             line=self._line('color')) from e
        return col


def _directives(lines: list[tuple[int, str]]):
    for number, raw in lines:
        text = raw.split('#', 1)[0]
        tokens = [_Token(m.group(), number, m.start() + 1)
                  for m in _TOKEN.finditer(text)]
        if tokens:
            yield tokens


def parse_document(text: str, first_line: int = 1) -> MapDocument:
    """
    Read a .smap document into a MapDocument, checking everything that can
    be pinned to a token.

    Args:
        text: The document.
        first_line: The line number of the first line, when the document
        is embedded in a larger file. Defaults to 1.

    Returns:
        MapDocument: The document.

    Raises:
        ParseError: On the first problem found.
    """

    doc = MapDocument()
    numbered = list(enumerate(text.splitlines(), start=first_line))
    edge_tokens: dict[int, _Token] = {}
    dart_tokens: list[tuple[int, int, _Token]] = []
    vertex_tokens: list[_Token] = []
    mark_edge_tokens: list[_Token] = []

    for tokens in _directives(numbered):
        head, args = tokens[0], tokens[1:]
        doc.where.setdefault(head.text, head.line)

        match head.text:
            case 'mode':
                if len(args) != 1 or args[0].text not in ('planar',
                                                          'surface'):
                    raise head.error("expected 'mode planar' or "
                                     "'mode surface'")
                doc.mode = Mode(args[0].text)
            case 'vertices':
                if doc.vertex_count is not None:
                    raise head.error('the vertex count is given twice')
                if len(args) != 1:
                    raise head.error("expected 'vertices <count>'")
                doc.vertex_count = args[0].integer('a vertex count')
            case 'edge':
                if len(args) != 3:
                    raise head.error("expected 'edge <id> <u> <v>'")
                eid = args[0].integer('an edge id')
                if eid in edge_tokens:
                    raise args[0].error(f'edge {eid} is declared twice')
                edge_tokens[eid] = args[0]
                u = args[1].integer('a vertex')
                v = args[2].integer('a vertex')
                vertex_tokens.extend(args[1:])
                doc.edges.append(Edge(eid, u, v))
            case 'rot':
                if not args:
                    raise head.error("expected 'rot <v> <dart>...'")
                v = args[0].integer('a vertex')
                vertex_tokens.append(args[0])
                if v in doc.rotations:
                    raise args[0].error(f'vertex {v} has two rotations')
                darts = []
                for tok in args[1:]:
                    m = _DART.fullmatch(tok.text)
                    if m is None:
                        raise tok.error(f"'{tok.text}' is not a dart; "
                                        "darts look like 3a or 3b")
                    dart = dart_of(int(m.group(1)),
                                   SIDE_NAMES.index(m.group(2)))
                    dart_tokens.append((v, dart, tok))
                    darts.append(dart)
                doc.rotations[v] = tuple(darts)
            case 'mark':
                if not args or args[0].text not in ('vertices', 'edges'):
                    raise head.error("expected 'mark vertices ...' or "
                                     "'mark edges ...'")
                if args[0].text == 'vertices':
                    doc.marked_vertices = (doc.marked_vertices or []) + \
                        [t.integer('a vertex') for t in args[1:]]
                    vertex_tokens.extend(args[1:])
                else:
                    doc.marked_edges = (doc.marked_edges or []) + \
                        [t.integer('an edge id') for t in args[1:]]
                    mark_edge_tokens.extend(args[1:])
            case 'color':
                if len(args) != 2:
                    raise head.error("expected 'color <v> <name>'")
                v = args[0].integer('a vertex')
                vertex_tokens.append(args[0])
                if v in doc.colors:
                    raise args[0].error(f'vertex {v} is colored twice')
                doc.colors[v] = args[1].text
            case _:
                raise head.error(f"unknown directive '{head.text}'")

    if doc.vertex_count is None:
        raise ParseError(attr='vertices', msg="missing 'vertices <count>'",
                         line=numbered[-1][0] if numbered else first_line)

    for tok in vertex_tokens:
        if int(tok.text) >= doc.vertex_count:
            raise tok.error(f'there is no vertex {tok.text}; vertices are '
                            f'0..{doc.vertex_count - 1}')

    # Marks may come before the edges they name
    for tok in mark_edge_tokens:
        if int(tok.text) not in edge_tokens:
            raise tok.error(f'there is no edge {tok.text}')

    if doc.mode == Mode.PLANAR and doc.rotations:
        raise ParseError(attr='rot', msg='rotations are only allowed in '
                                         'surface mode',
                         line=doc.where['rot'])

    # Dart placement, pinned to the offending token
    ends = {e.id: e for e in doc.edges}
    seen: dict[int, int] = {}
    for v, dart, tok in dart_tokens:
        e = ends.get(dart >> 1)
        if e is None:
            raise tok.error(f'dart {tok.text} refers to a missing edge')
        if dart in seen:
            raise tok.error(f'dart {dart_name(dart)} is listed twice '
                            f'(vertices {seen[dart]} and {v})')
        expected = e.u if dart % 2 == 0 else e.v
        if v != expected:
            raise tok.error(f'dart {dart_name(dart)} belongs at vertex '
                            f'{expected}, not {v}')
        seen[dart] = v

    return doc


def parse_smap(text: str,
               first_line: int = 1) -> tuple[EmbeddedGraph, Coloring | None]:
    """
    Parse a .smap document.

    Args:
        text: The document.
        first_line: The line number of its first line. Defaults to 1.

    Returns:
        tuple[EmbeddedGraph, Coloring | None]: The graph, and its coloring
        if the document colors it.

    Raises:
        ParseError: If the document is malformed or invalid.
    """

    doc = parse_document(text, first_line)
    try:
        eg = doc.to_graph()
    except ParseError:
        raise
    except ValidationError as e:
        raise ParseError(attr=e.attr, msg=e.msg, line=first_line) from e
    col = doc.coloring(eg)
    _log.debug(f'Parsed a {eg.mode} document with {eg.vertex_count} marked '
               f'vertices')
    return eg, col


def render_smap(eg: EmbeddedGraph, coloring: Coloring | None = None) -> str:
    """Write a graph (and optional coloring) as a .smap document."""

    g = eg.graph
    lines = [f'mode {eg.mode}', f'vertices {g.vertex_count}']
    lines.extend(f'edge {e.id} {e.u} {e.v}' for e in g.edges)
    if eg.surface is not None:
        for v, rot in enumerate(eg.surface.rotations):
            lines.append(' '.join([f'rot {v}'] +
                                  [dart_name(d) for d in rot]))
    if eg.marked_vertices != bitset.full(g.vertex_count):
        lines.append(' '.join(['mark vertices'] +
                              [str(v) for v in eg.marked]))
    if eg.marked_edges != frozenset(g.edge_ids):
        lines.append(' '.join(['mark edges'] +
                              [str(i) for i in sorted(eg.marked_edges)]))
    if coloring is not None:
        lines.extend(f'color {v} {coloring.names[c]}'
                     for v, c in coloring.vertex_colors)
    return '\n'.join(lines) + '\n'
