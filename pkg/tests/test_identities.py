import pytest
from hypothesis import (HealthCheck, assume, given, reject, settings,
                        strategies as st)

from islandpoly.analysis import (IdentityInstance, IdentityKind,
                                 check_identity)
from islandpoly.beta import Coloring
from islandpoly.graphs import EmbeddedGraph
from islandpoly.graphs.generators import (cycle_graph, one_vertex_torus,
                                          path_graph, torus_cycle)
from islandpoly.utils import GraphError, HypothesisError

from strategies import colorings, planar_graphs, torus_graphs

K = IdentityKind

PLANAR_ONLY = {K.PANTS, K.PANTS_DIFF, K.SHORT_CIRCUIT, K.SHORT_CIRCUIT_SPLIT}
SURFACE_KINDS = [k for k in IdentityKind if k not in PLANAR_ONLY]


def _renamed(col: Coloring, prefix: str) -> Coloring:
    return Coloring(col.vertex_colors,
                    tuple(prefix + name for name in col.names))


def _draw_instance(data,
                   kind: IdentityKind,
                   graphs,
                   operands) -> IdentityInstance:
    """Draw the main graph from `graphs`, the others from `operands`."""

    eg = data.draw(graphs)

    def vertex(g: EmbeddedGraph) -> int:
        return data.draw(st.sampled_from(g.marked))

    def distinct(count: int) -> tuple[int, ...]:
        assume(eg.vertex_count >= count)
        return tuple(data.draw(st.permutations(eg.marked))[:count])

    match kind:
        case K.DISJOINT:
            more = data.draw(st.lists(operands, min_size=1, max_size=2))
            return IdentityInstance(kind, (eg, *more))
        case K.APPENDIX | K.SELF_LOOP:
            return IdentityInstance(kind, (eg,), vertices=(vertex(eg),))
        case K.BRIDGE | K.WEDGE:
            other = data.draw(operands)
            return IdentityInstance(kind, (eg, other),
                                    vertices=(vertex(eg), vertex(other)))
        case K.CONTRACT | K.SPLIT:
            edges = [e for e in eg.marked_edge_list
                     if kind == K.SPLIT or not e.is_loop]
            assume(edges)
            e = data.draw(st.sampled_from(edges))
            return IdentityInstance(kind, (eg,), edge=e.id)
        case K.PARALLEL_EDGE:
            edges = [e for e in eg.marked_edge_list if not e.is_loop]
            assume(edges)
            e = data.draw(st.sampled_from(edges))
            return IdentityInstance(kind, (eg,), vertices=(e.u, e.v))
        case K.PANTS | K.PANTS_DIFF:
            return IdentityInstance(kind, (eg,), vertices=distinct(4))
        case K.SHORT_CIRCUIT | K.SHORT_CIRCUIT_SPLIT:
            return IdentityInstance(kind, (eg,), vertices=distinct(2))
        case K.COLOR_MERGE:
            col = data.draw(colorings(eg, min_colors=2))
            assume(col.color_count >= 2)
            names = data.draw(st.permutations(col.names))[:2]
            return IdentityInstance(kind, (eg,), colorings=(col,),
                                    colors=names)
        case K.COLORED_APPENDIX:
            col = data.draw(colorings(eg))
            return IdentityInstance(kind, (eg,), colorings=(col,),
                                    vertices=(vertex(eg),))
        case K.COLORED_DISJOINT | K.COLORED_BRIDGE:
            other = data.draw(operands)
            cols = (_renamed(data.draw(colorings(eg)), 'a'),
                    _renamed(data.draw(colorings(other)), 'b'))
            vertices = (vertex(eg), vertex(other)) \
                if kind == K.COLORED_BRIDGE else ()
            return IdentityInstance(kind, (eg, other), colorings=cols,
                                    vertices=vertices)


@pytest.mark.parametrize('kind', list(IdentityKind), ids=str)
@settings(max_examples=100, derandomize=True)
@given(data=st.data())
def test_planar_identities_hold(kind, data):
    inst = _draw_instance(data, kind, planar_graphs(max_n=8),
                          planar_graphs(max_n=3))
    assert check_identity(inst).is_zero()


@pytest.mark.parametrize('kind', SURFACE_KINDS, ids=str)
@settings(max_examples=100, derandomize=True,
          suppress_health_check=[HealthCheck.filter_too_much,
                                 HealthCheck.function_scoped_fixture])
@given(data=st.data())
def test_identities_hold_on_the_torus(kind, data):
    inst = _draw_instance(data, kind, torus_graphs(max_n=6),
                          torus_graphs(max_n=3))
    try:
        residual = check_identity(inst)
    except HypothesisError:
        # A new edge that splits faces for only some subsets
        if kind not in (K.SELF_LOOP, K.PARALLEL_EDGE):
            raise
        reject()
    assert residual.is_zero()


def test_split_a_single_edge():
    inst = IdentityInstance('split', (EmbeddedGraph.planar(path_graph(2)),),
                            edge=0)
    assert check_identity(inst).is_zero()


@pytest.mark.parametrize('inst, message', [
    (IdentityInstance('disjoint', (EmbeddedGraph.planar(path_graph(2)),)),
     'at least two'),
    (IdentityInstance('appendix', (EmbeddedGraph.planar(path_graph(2)),)),
     'vertex designation'),
    (IdentityInstance('contract', (EmbeddedGraph.planar(path_graph(2)),)),
     'needs an edge'),
    (IdentityInstance('wedge',
                      (EmbeddedGraph.planar(path_graph(2)),
                       EmbeddedGraph.on_surface(one_vertex_torus())),
                      vertices=(0, 0)),
     'all planar'),
    (IdentityInstance('pants', (torus_cycle(4),), vertices=(0, 1, 2, 3)),
     'planar identity'),
    (IdentityInstance('parallel-edge',
                      (EmbeddedGraph.planar(path_graph(3)),),
                      vertices=(0, 2)),
     'not adjacent'),
    (IdentityInstance('short-circuit',
                      (EmbeddedGraph.planar(path_graph(3)),),
                      vertices=(1, 1)),
     'distinct'),
    (IdentityInstance('color-merge', (EmbeddedGraph.planar(path_graph(2)),),
                      colorings=(Coloring.from_mapping({0: 'a', 1: 'b'}),),
                      colors=('a',)),
     'two colors'),
])
def test_hypotheses(inst, message):
    with pytest.raises(HypothesisError, match=message):
        check_identity(inst)


def test_colorings_must_not_share_names():
    eg = EmbeddedGraph.planar(path_graph(2))
    col = Coloring.from_mapping({0: 'a', 1: 'b'})
    inst = IdentityInstance('colored-disjoint', (eg, eg),
                            colorings=(col, col))
    with pytest.raises(HypothesisError, match='share colors'):
        check_identity(inst)


def test_contract_rejects_loops():
    eg = EmbeddedGraph.planar(cycle_graph(1))
    with pytest.raises(HypothesisError, match='self-loop'):
        check_identity(IdentityInstance('contract', (eg,), edge=0))


def test_unknown_vertices():
    eg = EmbeddedGraph.planar(path_graph(3))
    with pytest.raises(GraphError):
        check_identity(IdentityInstance('pants', (eg,),
                                        vertices=(0, 1, 2, 7)))
