from fractions import Fraction

import pytest
from hypothesis import given, settings

from islandpoly.analysis import euler_emergence, tee, total_island_count
from islandpoly.graphs import EmbeddedGraph, Multigraph
from islandpoly.graphs.generators import (complete_graph, cycle_graph,
                                          path_graph, torus_cycle)
from islandpoly.utils import HypothesisError

from strategies import graphs, simple_planar_graphs


def _planar(g: Multigraph) -> EmbeddedGraph:
    return EmbeddedGraph.planar(g)


@pytest.mark.parametrize('g, expected', [
    (cycle_graph(3), -2),
    (complete_graph(4), -6),
    (path_graph(4), 0),
])
def test_small_graphs(g, expected):
    result = euler_emergence(_planar(g))
    assert result.lhs == result.rhs == expected
    assert result.euler_characteristic == 2
    assert result.holds


@settings(max_examples=200)
@given(simple_planar_graphs(min_n=3, max_n=8))
def test_connected_simple_planar_graphs(g):
    result = euler_emergence(_planar(g))
    assert result.holds
    assert result.recursion_residual.is_zero()


@given(graphs(max_n=6))
def test_the_recursion_always_holds(eg):
    if eg.vertex_count < 3:
        return
    result = euler_emergence(eg, allow_multigraph=True)
    assert result.recursion_residual.is_zero()
    assert result.rhs == result.euler_characteristic - 2 * result.faces


def test_torus_cycle():
    result = euler_emergence(torus_cycle(3))
    assert result.euler_characteristic == 0
    assert result.faces == 1
    assert result.rhs == -2
    # beta = 3(1+x) + x^2, so only the full set contributes -beta(-1)
    assert result.lhs == -1
    assert not result.holds


def test_hypotheses():
    with pytest.raises(HypothesisError, match='at least 3'):
        euler_emergence(_planar(path_graph(2)))
    looped = Multigraph.from_edges(3, [(0, 1), (1, 2), (2, 2)])
    with pytest.raises(HypothesisError, match='loops or parallel'):
        euler_emergence(_planar(looped))
    assert euler_emergence(_planar(looped), allow_multigraph=True) \
        .recursion_residual.is_zero()


def test_tee():
    assert total_island_count(_planar(cycle_graph(3))) == 2
    assert total_island_count(_planar(path_graph(4))) == 0
    assert tee(2) == Fraction(-2)
    assert tee(2, Fraction(1, 2)) == -1
    assert tee(-3, 2) == 6
    assert isinstance(tee(0), Fraction)
