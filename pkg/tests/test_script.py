import pytest
from hypothesis import given, settings, strategies as st

from islandpoly.beta import beta_total
from islandpoly.closedforms import tree_poly
from islandpoly.graphs import EmbeddedGraph
from islandpoly.graphs.generators import (cycle_graph, discrete_graph,
                                          path_graph, torus_cycle)
from islandpoly.transforms import (AdmissibleOp, ScriptOp, apply_op,
                                   parse_script, run_script,
                                   tree_cycle_generator)
from islandpoly.utils import ScriptError

from strategies import trees


def _planar(g):
    return EmbeddedGraph.planar(g)


class TestParse:
    def test_comments_and_blank_lines(self):
        ops = parse_script('loop 0\npar 0 1  # again\n\n# note\nsubdiv 2\n')
        assert ops == [ScriptOp('loop', (0,), 1), ScriptOp('par', (0, 1), 2),
                       ScriptOp('subdiv', (2,), 5)]

    @pytest.mark.parametrize('text, line, message', [
        ('loop 0\nspin 1', 2, 'unknown operation'),
        ('subdiv 0\n\nloop 0 1', 3, 'takes 1 or 3 arguments'),
        ('subdiv x', 1, 'integers'),
        ('I 0 -1', 1, 'nonnegative'),
    ])
    def test_errors_carry_the_line(self, text, line, message):
        with pytest.raises(ScriptError, match=message) as info:
            parse_script(text)
        assert info.value.line == line
        assert str(info.value).endswith(f'(line {line})')


class TestRun:
    def test_build_a_cycle_from_a_path(self):
        eg = run_script(_planar(path_graph(2)),
                        parse_script('par 0 1\nsubdiv 1\nsubdiv 2'))
        assert eg.vertex_count == 4
        assert beta_total(eg) == beta_total(_planar(cycle_graph(4)))

    def test_wedge_and_bridge(self):
        eg = _planar(discrete_graph(3))
        bridged = apply_op(eg, ScriptOp('bridge', (0, 1)))
        assert bridged.graph.edge_count == 1

        wedged = run_script(eg, parse_script('wedge 0 1\nwedge 0 1'))
        assert wedged.vertex_count == 1

    def test_joins_need_two_islands(self):
        with pytest.raises(ScriptError, match='same island') as info:
            run_script(_planar(path_graph(3)),
                       parse_script('subdiv 0\nbridge 0 1'))
        assert info.value.line == 2

    def test_validation_errors_become_script_errors(self):
        with pytest.raises(ScriptError, match='no edge') as info:
            run_script(_planar(path_graph(3)), parse_script('\ncontract 7'))
        assert info.value.line == 2

    def test_similar_adjacency_needs_an_edge(self):
        with pytest.raises(ScriptError, match='not adjacent'):
            apply_op(_planar(path_graph(3)), ScriptOp('II', (0, 2, 1)))

    def test_loops_on_the_torus(self):
        eg = apply_op(torus_cycle(3), ScriptOp('I', (1, 2)))
        assert eg.genus == 1
        assert eg.vertex_count == 5


class TestTreeCycles:
    def test_seed_must_be_a_planar_tree(self):
        with pytest.raises(ScriptError, match='at least 3'):
            tree_cycle_generator(_planar(path_graph(2)), [])
        with pytest.raises(ScriptError, match='at least 3'):
            tree_cycle_generator(_planar(cycle_graph(3)), [])
        with pytest.raises(ScriptError, match='planar'):
            tree_cycle_generator(torus_cycle(3), [])

    def test_only_admissible_operations(self):
        with pytest.raises(ScriptError, match='admissible'):
            tree_cycle_generator(_planar(path_graph(3)),
                                 [ScriptOp('loop', (0,))])

    @pytest.mark.parametrize('kind, w, k', [
        ('loop', None, 0),
        ('II', None, 0),
        ('I', 2, 0),
        ('I', None, -1),
    ])
    def test_invalid_admissible_ops(self, kind, w, k):
        with pytest.raises(ScriptError):
            AdmissibleOp(kind, 0, w, k)

    def test_no_operations_keeps_the_tree(self):
        eg = tree_cycle_generator(_planar(path_graph(4)), [])
        assert beta_total(eg) == tree_poly(4)

    @settings(max_examples=200)
    @given(trees(min_n=3, max_n=5), st.data())
    def test_signed_total_vanishes(self, tree, data):
        eg = tree
        ops = []
        for _ in range(data.draw(st.integers(0, 3))):
            k = data.draw(st.integers(0, 2))
            if data.draw(st.booleans()):
                op = AdmissibleOp('I', data.draw(st.sampled_from(eg.marked)),
                                  k=k)
            else:
                edges = [e for e in eg.marked_edge_list if not e.is_loop]
                e = data.draw(st.sampled_from(edges))
                op = AdmissibleOp('II', e.u, e.v, k)
            ops.append(op)
            eg = apply_op(eg, op.to_script_op())

        assert tree_cycle_generator(tree, ops) == eg
        assert beta_total(eg)(-1) == 0
