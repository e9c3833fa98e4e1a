import pytest
from hypothesis import given

from islandpoly.graphs import (Island, Multigraph, RotationMap, bitset,
                               complement_components, dart_name, dart_of,
                               twin, validate_and_trace)
from islandpoly.graphs.generators import (complete_graph, cycle_graph,
                                          one_vertex_torus,
                                          planar_rotation_map)
from islandpoly.utils import IslandError, MapError

from strategies import simple_planar_graphs


def test_darts():
    assert dart_of(3, 1) == 7
    assert twin(7) == 6 and twin(6) == 7
    assert dart_name(7) == '3b'
    assert dart_name(0) == '0a'


def test_one_vertex_torus():
    m = one_vertex_torus()
    result = validate_and_trace(m)
    assert result.faces.face_count == 1
    assert result.genus == 1
    assert m.euler_characteristic == 0


def test_single_vertex_is_a_sphere():
    m = RotationMap(Multigraph(1), ((),))
    assert m.face_count == 1
    assert m.genus == 0


def test_planar_triangle():
    m = planar_rotation_map(cycle_graph(3))
    assert m.face_count == 2
    assert m.genus == 0
    # Each face is bounded by one side of every edge
    assert sorted(len(orbit) for orbit in m.faces.orbits) == [3, 3]


def test_k4_on_the_sphere():
    m = planar_rotation_map(complete_graph(4))
    assert (m.face_count, m.genus) == (4, 0)


@given(simple_planar_graphs(max_n=9))
def test_networkx_embeddings_have_genus_zero(g):
    m = planar_rotation_map(g)
    assert m.genus == 0
    assert m.face_count == g.edge_count - g.vertex_count + 2


def _path_map(rotations):
    return RotationMap(Multigraph.from_edges(2, [(0, 1)]), rotations)


@pytest.mark.parametrize('rotations, message', [
    (((0,), (0,)), 'more than once'),
    (((1,), (0,)), 'belongs at vertex'),
    (((0,), ()), 'not placed'),
    (((0, 4), (1,)), 'has no edge'),
    (((0,),), 'expected 2 rotations'),
])
def test_invalid_rotations(rotations, message):
    with pytest.raises(MapError, match=message):
        _path_map(rotations)


def test_disconnected_host():
    with pytest.raises(MapError, match='not connected'):
        RotationMap(Multigraph(2), ((), ()))


def test_sparse_edge_ids():
    host = Multigraph(2, ((1, 0, 1),))
    with pytest.raises(MapError, match='0..e-1'):
        RotationMap(host, ((2,), (3,)))


def test_corners():
    m = one_vertex_torus()
    # Every corner of the only vertex lies in the only face
    assert m.corners_in_face(0, 0) == [0, 1, 2, 3]
    assert m.corner_face(0, 4) == 0
    assert m.common_corner(0, 0) == (0, 1)
    with pytest.raises(MapError):
        m.corner_face(0, 5)


def test_common_corner_needs_a_shared_face():
    # Two triangles sharing vertex 0, so 2 and 4 are not adjacent
    g = Multigraph.from_edges(
        5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]
    )
    m = planar_rotation_map(g)
    v_pos, w_pos = m.common_corner(2, 4)
    face = m.corner_face(2, v_pos)
    assert face == m.corner_face(4, w_pos)


def test_complement_of_a_cycle():
    m = planar_rotation_map(cycle_graph(4))
    cycle = Island(bitset.full(4), frozenset(range(4)))
    assert complement_components(m, cycle) == 2
    arc = Island(bitset.from_members([0, 1]), frozenset({0}))
    assert complement_components(m, arc) == 1


def test_torus_loop_does_not_separate():
    m = one_vertex_torus()
    # A single face can not be split
    assert m.region_components(0b1, [0]) == 1
    assert m.region_components(0b1, [0, 1]) == 1


@pytest.mark.parametrize('island, message', [
    (Island(bitset.from_members([0, 2]), frozenset()), 'not connected'),
    (Island(bitset.from_members([0]), frozenset({1})), 'leaves'),
    (Island(bitset.from_members([9]), frozenset()), 'nonempty subset'),
])
def test_invalid_islands(island, message):
    m = planar_rotation_map(cycle_graph(4))
    with pytest.raises(IslandError, match=message):
        complement_components(m, island)
