from pathlib import Path

import pytest

from islandpoly.analysis import IdentityKind
from islandpoly.beta import beta_colored, beta_total
from islandpoly.cli import parse_check_file, parse_document, parse_smap, \
    render_smap
from islandpoly.closedforms import cycle_poly
from islandpoly.graphs import EmbeddedGraph, Mode
from islandpoly.graphs.generators import cycle_graph, torus_cycle
from islandpoly.poly import IntPoly
from islandpoly.utils import ParseError

SAMPLES = Path(__file__).parent.parent / 'samples'


def _sample(name: str) -> str:
    return (SAMPLES / name).read_text(encoding='utf-8')


class TestParse:
    def test_planar_cycle(self):
        eg, col = parse_smap(_sample('c4.smap'))
        assert col is None
        assert eg.mode == Mode.PLANAR
        assert eg.graph == cycle_graph(4)
        assert beta_total(eg) == cycle_poly(4)

    def test_torus_cycle(self):
        eg, _ = parse_smap(_sample('torus_cycle.smap'))
        assert eg == torus_cycle(3)
        assert beta_total(eg) == IntPoly.of(3, 3, 1)

    def test_one_vertex_torus(self):
        eg, _ = parse_smap(_sample('torus_vertex.smap'))
        assert eg.genus == 1
        assert eg.surface.face_count == 1

    def test_colors(self):
        eg, col = parse_smap(_sample('p3_colored.smap'))
        assert col.names == ('a', 'b')
        assert beta_colored(eg, col) == IntPoly.of(3, 1)

    def test_render_reads_back(self):
        eg = torus_cycle(4, separating=True)
        text = render_smap(eg)
        assert text.startswith('mode surface\nvertices 4\n')
        assert 'mark edges 0 1 2 3\n' in text
        assert parse_smap(text)[0] == eg

    def test_render_planar_coloring(self):
        eg, col = parse_smap(_sample('p3_colored.smap'))
        assert render_smap(eg, col) == (
            'mode planar\nvertices 3\nedge 0 0 1\nedge 1 1 2\n'
            'color 0 a\ncolor 1 b\ncolor 2 a\n'
        )

    def test_marks_before_edges(self):
        text = 'vertices 3\nmark edges 1\nedge 0 0 1\nedge 1 1 2\n'
        eg, _ = parse_smap(text)
        assert eg.marked_edges == frozenset({1})
        assert eg == parse_smap('vertices 3\nedge 0 0 1\nedge 1 1 2\n'
                                'mark edges 1\n')[0]

    def test_document_remembers_lines(self):
        doc = parse_document('\n# note\nvertices 2\nedge 0 0 1\n')
        assert doc.where == {'vertices': 3, 'edge': 4}
        assert doc.vertex_count == 2


@pytest.mark.parametrize('text, line, column, message', [
    ('vertices 3\nedge 0 0 x', 2, 10, "expected a vertex, got 'x'"),
    ('vertex 3', 1, 1, "unknown directive 'vertex'"),
    ('edge 0 0 1', 1, 1, "missing 'vertices"),
    ('vertices 2\nvertices 2', 2, 1, 'given twice'),
    ('vertices 2\nedge 0 0 5', 2, 10, 'there is no vertex 5'),
    ('vertices 2\nedge 0 0 1\nedge 0 1 0', 3, 6, 'declared twice'),
    ('vertices 1\nedge 0 0 0\nrot 0 0a 0b', 3, 1, 'surface mode'),
    ('mode surface\nvertices 1\nedge 0 0 0\nrot 0 0a 0c', 4, 10,
     'is not a dart'),
    ('mode surface\nvertices 2\nedge 0 0 1\nrot 0 0b\nrot 1 0a', 4, 7,
     'belongs at vertex 1'),
    ('mode surface\nvertices 2\nedge 0 0 1\nrot 0 0a 0a', 4, 10,
     'listed twice'),
    ('vertices 2\nedge 0 0 1\nmark edges 3', 3, 12, 'there is no edge 3'),
    ('vertices 2\ncolor 0 red', 2, 1, '1 have no color'),
    ('mode torus\nvertices 1', 1, 1, 'mode surface'),
])
def test_errors(text, line, column, message):
    with pytest.raises(ParseError, match=message) as info:
        parse_smap(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f'line {line}, column {column}: ')


def test_invalid_rotations_point_at_the_rot_lines():
    text = 'mode surface\nvertices 2\nedge 0 0 1\n\nrot 0 0a'
    with pytest.raises(ParseError) as info:
        parse_smap(text)
    assert info.value.line == 5


def test_offset_lines():
    with pytest.raises(ParseError) as info:
        parse_smap('vertices 1\nbogus', first_line=10)
    assert info.value.line == 11


class TestCheckFiles:
    def test_wedge(self):
        inst = parse_check_file(_sample('checks/wedge.check'))
        assert inst.kind == IdentityKind.WEDGE
        assert inst.vertices == (1, 0)
        assert [g.vertex_count for g in inst.graphs] == [2, 3]
        assert inst.colorings == ()

    def test_colored(self):
        inst = parse_check_file(_sample('checks/color_merge.check'))
        assert inst.colors == ('red', 'blue')
        assert inst.colorings[0].color_count == 3

    def test_graph_lines_are_file_lines(self):
        text = 'kind split\non-edge 0\ngraph\nvertices 2\nedge 0 0 3\nend\n'
        with pytest.raises(ParseError, match='no vertex 3') as info:
            parse_check_file(text)
        assert info.value.line == 5

    @pytest.mark.parametrize('text, line, message', [
        ('at 0', 1, "missing 'kind'"),
        ('kind spiral', 1, "unknown identity 'spiral'"),
        ('kind split\non-edge x', 2, 'integers'),
        ('kind wedge\ngraph\nvertices 1\n', 2, "no 'end'"),
        ('kind color-merge\ngraph\nvertices 1\nend', 4, 'color directives'),
        ('kind split\nsplice 0', 2, 'splice'),
        ('kind split\nfrobnicate', 2, 'unknown directive'),
    ])
    def test_errors(self, text, line, message):
        with pytest.raises(ParseError, match=message) as info:
            parse_check_file(text)
        assert info.value.line == line

    def test_planar_graphs(self):
        inst = parse_check_file('kind disjoint\ngraph\nvertices 1\nend\n'
                                'graph\nvertices 2\nend\n')
        assert all(isinstance(g, EmbeddedGraph) for g in inst.graphs)
        assert inst.graphs[1].vertex_count == 2
